#include "rds/search.hpp"

#include <algorithm>
#include <mutex>
#include <set>
#include <thread>

#include "rds/audit.hpp"
#include "rds/error.hpp"
#include "rds/squarefree.hpp"

namespace rds {

std::string_view to_string(Requirement r) {
  switch (r) {
    case Requirement::any: return "any";
    case Requirement::strong_general_position: return "strong_general_position";
    case Requirement::literal_general_position: return "literal_general_position";
  }
  return "any";
}

Requirement parse_requirement(std::string_view text) {
  if (text == "any") return Requirement::any;
  if (text == "strong_general_position") return Requirement::strong_general_position;
  if (text == "literal_general_position") return Requirement::literal_general_position;
  throw Error(Errc::parse, "unknown requirement \"" + std::string(text) + "\"");
}

void SearchSpec::validate() const {
  if (numerator_bound < 1 || denominator_bound < 1) {
    throw Error(Errc::invalid_argument, "search bounds must be positive");
  }
  if (target_size < 3) throw Error(Errc::invalid_argument, "target_size must be at least 3");
  if (k < 1 || !is_squarefree(Integer(static_cast<long>(k)))) {
    throw Error(Errc::invalid_argument, "search k must be a positive squarefree integer");
  }
}

std::vector<LatticePoint> candidate_points(const SearchSpec& spec) {
  std::set<Rational> values;
  for (long q = 1; q <= spec.denominator_bound; ++q) {
    for (long p = -spec.numerator_bound; p <= spec.numerator_bound; ++p) values.insert(Rational(Integer(p), Integer(q)));
  }
  std::vector<LatticePoint> out;
  out.reserve(values.size() * values.size());
  for (const auto& x : values) {
    for (const auto& y : values) out.push_back({x, y});
  }
  std::sort(out.begin(), out.end(), [](const LatticePoint& a, const LatticePoint& b) {
    const Integer adx = a.x.denominator(), bdx = b.x.denominator();
    if (adx != bdx) return adx < bdx;
    const Integer ady = a.yc.denominator(), bdy = b.yc.denominator();
    if (ady != bdy) return ady < bdy;
    return a < b;
  });
  return out;
}

Configuration canonical_form(const Configuration& c) {
  const std::size_t n = c.size();
  if (n == 0) return c;
  if (n == 1) return Configuration(c.k(), {{0, 0}}, c.provenance());
  const Rational kk(c.k());
  const auto& pts = c.points();
  std::optional<std::vector<LatticePoint>> best;
  std::vector<LatticePoint> image;
  image.reserve(n - 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      // z -> (z - z_i) / (z_j - z_i) on x + yc sqrt(k) i.
      const Rational u = pts[j].x - pts[i].x;
      const Rational v = pts[j].yc - pts[i].yc;
      const Rational norm = u * u + kk * v * v;
      for (int orientation : {1, -1}) {
        image.clear();
        for (std::size_t l = 0; l < n; ++l) {
          if (l == i || l == j) continue;
          const Rational s = pts[l].x - pts[i].x;
          const Rational t = pts[l].yc - pts[i].yc;
          Rational yc = (t * u - s * v) / norm;
          if (orientation < 0) yc = -yc;
          image.push_back({(s * u + kk * t * v) / norm, std::move(yc)});
        }
        std::sort(image.begin(), image.end());
        if (!best || image < *best) best = image;
      }
    }
  }
  std::vector<LatticePoint> out{{0, 0}, {1, 0}};
  out.insert(out.end(), best->begin(), best->end());
  return Configuration(c.k(), std::move(out), c.provenance());
}

bool meets_requirement(const Configuration& c, Requirement r) {
  switch (r) {
    case Requirement::any: return true;
    case Requirement::strong_general_position: return audit_general_position(c).strong_ok;
    case Requirement::literal_general_position: return audit_general_position(c).literal_ok;
  }
  return false;
}

namespace {

using FoundSet = std::set<std::vector<LatticePoint>>;

class CellSearcher {
 public:
  CellSearcher(const SearchSpec& spec, const std::vector<LatticePoint>& cands,
               const std::vector<std::vector<char>>& compatible)
      : spec_(spec), cands_(cands), compatible_(compatible) {}

  std::size_t run_cell(std::size_t cell, FoundSet& found) {
    std::vector<std::size_t> next;
    for (std::size_t j = cell + 1; j < cands_.size(); ++j) {
      if (compatible_[cell][j]) next.push_back(j);
    }
    chosen_ = {cell};
    const std::size_t before = found.size();
    extend(next, found);
    return found.size() - before;
  }

 private:
  void extend(const std::vector<std::size_t>& pool, FoundSet& found) {
    if (chosen_.size() == spec_.target_size) {
      record(found);
      return;
    }
    if (chosen_.size() + pool.size() < spec_.target_size) return;
    std::vector<std::size_t> next;
    for (std::size_t p = 0; p < pool.size(); ++p) {
      const std::size_t idx = pool[p];
      next.clear();
      for (std::size_t q = p + 1; q < pool.size(); ++q) {
        if (compatible_[idx][pool[q]]) next.push_back(pool[q]);
      }
      chosen_.push_back(idx);
      extend(next, found);
      chosen_.pop_back();
    }
  }

  void record(FoundSet& found) const {
    std::vector<LatticePoint> pts;
    pts.reserve(chosen_.size());
    for (std::size_t i : chosen_) pts.push_back(cands_[i]);
    const Configuration c(spec_.k, std::move(pts));
    if (!meets_requirement(c, spec_.require)) return;
    found.insert(canonical_form(c).points());
  }

  const SearchSpec& spec_;
  const std::vector<LatticePoint>& cands_;
  const std::vector<std::vector<char>>& compatible_;
  std::vector<std::size_t> chosen_;
};

std::vector<CellRange> to_ranges(const std::vector<char>& done) {
  std::vector<CellRange> out;
  for (std::size_t i = 0; i < done.size();) {
    if (!done[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < done.size() && done[j]) ++j;
    out.push_back({i, j});
    i = j;
  }
  return out;
}

std::string provenance_of(const SearchSpec& spec) {
  return "search:k=" + std::to_string(spec.k) + ",N=" + std::to_string(spec.numerator_bound) +
         ",D=" + std::to_string(spec.denominator_bound) + ",size=" + std::to_string(spec.target_size) +
         ",require=" + std::string(to_string(spec.require));
}

SearchCheckpoint assemble(const SearchSpec& spec, const std::vector<LatticePoint>& cands, const std::vector<char>& done,
                          const FoundSet& found) {
  SearchCheckpoint cp;
  cp.spec = spec;
  for (std::size_t i = 0; i < cands.size(); ++i) {
    if (!done[i]) cp.frontier.push_back({cands[i]});
  }
  const std::string label = provenance_of(spec);
  for (const auto& pts : found) cp.found.emplace_back(spec.k, pts, label);
  cp.exhausted_ranges = to_ranges(done);
  return cp;
}

void load(const SearchCheckpoint& cp, std::size_t cell_count, std::vector<char>& done, FoundSet& found) {
  for (const auto& r : cp.exhausted_ranges) {
    if (r.begin > r.end || r.end > cell_count) {
      throw Error(Errc::invalid_argument, "checkpoint cell range out of bounds");
    }
    std::fill(done.begin() + static_cast<std::ptrdiff_t>(r.begin), done.begin() + static_cast<std::ptrdiff_t>(r.end), 1);
  }
  for (const auto& c : cp.found) found.insert(c.points());
}

}  // namespace

SearchCheckpoint search(const SearchSpec& spec, const std::optional<SearchCheckpoint>& checkpoint,
                        const SearchOptions& options) {
  spec.validate();
  if (checkpoint && !(checkpoint->spec == spec)) {
    throw Error(Errc::invalid_argument, "checkpoint was produced for a different search spec");
  }
  const std::vector<LatticePoint> cands = candidate_points(spec);
  const std::size_t count = cands.size();

  std::vector<char> done(count, 0);
  FoundSet found;
  if (checkpoint) load(*checkpoint, count, done, found);

  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < count && pending.size() < options.max_cells; ++i) {
    if (!done[i]) pending.push_back(i);
  }
  if (pending.empty()) return assemble(spec, cands, done, found);

  std::vector<std::vector<char>> compatible(count, std::vector<char>(count, 0));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      const bool ok = is_rational_square(squared_distance(cands[i], cands[j], spec.k));
      compatible[i][j] = compatible[j][i] = ok ? 1 : 0;
    }
  }

  const unsigned workers = std::max(1U, std::min<unsigned>(options.threads, static_cast<unsigned>(pending.size())));
  std::vector<FoundSet> partial(workers);
  std::mutex progress_mutex;
  auto work = [&](unsigned w) {
    CellSearcher searcher(spec, cands, compatible);
    for (std::size_t p = w; p < pending.size(); p += workers) {
      const std::size_t added = searcher.run_cell(pending[p], partial[w]);
      if (options.on_progress) {
        std::lock_guard lock(progress_mutex);
        options.on_progress({pending[p], count, added});
      }
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (const auto& part : partial) found.insert(part.begin(), part.end());
  for (std::size_t i : pending) done[i] = 1;
  return assemble(spec, cands, done, found);
}

SearchCheckpoint merge(const SearchCheckpoint& a, const SearchCheckpoint& b) {
  if (!(a.spec == b.spec)) throw Error(Errc::invalid_argument, "cannot merge checkpoints of different specs");
  const std::vector<LatticePoint> cands = candidate_points(a.spec);
  std::vector<char> done(cands.size(), 0);
  FoundSet found;
  load(a, cands.size(), done, found);
  load(b, cands.size(), done, found);
  return assemble(a.spec, cands, done, found);
}

}  // namespace rds
