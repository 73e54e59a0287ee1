#include "rds/audit.hpp"

namespace rds {

namespace {

std::vector<std::size_t> first_indices(std::size_t count) {
  std::vector<std::size_t> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = i;
  return out;
}

}  // namespace

std::vector<std::size_t> largest_collinear_subset(const Configuration& c) {
  const std::size_t n = c.size();
  const auto& p = c.points();
  std::vector<std::size_t> best = first_indices(std::min<std::size_t>(n, 2));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (n - i <= best.size()) return best;
      std::vector<std::size_t> line{i, j};
      for (std::size_t l = j + 1; l < n; ++l) {
        if (collinear(p[i], p[j], p[l])) line.push_back(l);
      }
      if (line.size() > best.size()) best = std::move(line);
    }
  }
  return best;
}

std::vector<std::size_t> largest_concyclic_subset(const Configuration& c) {
  const std::size_t n = c.size();
  const auto& p = c.points();
  std::vector<std::size_t> best = first_indices(std::min<std::size_t>(n, 2));
  // Seed with each non-collinear triple; the circle through it is unique and
  // the 4-point determinant then detects membership exactly. Only points after
  // the seed need checking: a larger circle would be found from its own first
  // three members.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t l = j + 1; l < n; ++l) {
        if (n - i <= best.size()) return best;
        if (collinear(p[i], p[j], p[l])) continue;
        std::vector<std::size_t> circle{i, j, l};
        for (std::size_t q = l + 1; q < n; ++q) {
          if (concyclic(p[i], p[j], p[l], p[q], c.k())) circle.push_back(q);
        }
        if (circle.size() > best.size()) best = std::move(circle);
      }
    }
  }
  return best;
}

AuditReport audit_general_position(const Configuration& c) {
  AuditReport r;
  r.n = c.size();
  r.line_threshold = static_cast<long>(r.n) - 4;
  r.circle_threshold = static_cast<long>(r.n) - 3;

  auto line = largest_collinear_subset(c);
  auto circle = largest_concyclic_subset(c);
  r.max_collinear = line.size();
  r.max_concyclic = circle.size();

  const bool line_violation =
      r.line_threshold >= 0 && static_cast<long>(r.max_collinear) >= r.line_threshold;
  const bool circle_violation =
      r.circle_threshold >= 0 && static_cast<long>(r.max_concyclic) >= r.circle_threshold;
  r.literal_ok = !line_violation && !circle_violation;
  r.vacuous_line = r.line_threshold <= 2;
  r.vacuous_circle = r.circle_threshold <= 2;
  r.strong_ok = r.max_collinear <= 2 && r.max_concyclic <= 3;

  if (r.max_collinear >= 3 || line_violation) r.witnesses.push_back({"collinear", std::move(line)});
  if (r.max_concyclic >= 4 || circle_violation) r.witnesses.push_back({"concyclic", std::move(circle)});
  return r;
}

}  // namespace rds
