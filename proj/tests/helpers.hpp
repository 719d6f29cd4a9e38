#pragma once

#include <doctest.h>

#include "rauzy/error.hpp"

// CHECK that `expr` throws rauzy::Error of the given kind.
#define CHECK_KIND(expr, k)                                  \
  do {                                                       \
    bool thrown_ = false;                                    \
    try {                                                    \
      (void)(expr);                                          \
    } catch (const rauzy::Error& e_) {                       \
      thrown_ = true;                                        \
      CHECK(e_.kind() == rauzy::ErrorKind::k);               \
    }                                                        \
    CHECK_MESSAGE(thrown_, "expected " #k " from " #expr);   \
  } while (0)
