#pragma once

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace rds::test {

// Code of the rds::Error thrown by fn; records a failure when nothing is thrown.
inline Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an exception";
  return Errc::parse;
}

}  // namespace rds::test
