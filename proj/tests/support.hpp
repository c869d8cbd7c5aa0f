#pragma once

#include <optional>

#include "nmg/error.hpp"

// Error kind thrown by f, or nothing if it returns normally.
template <class F>
std::optional<nmg::ErrorCode> error_of(F&& f) {
  try {
    f();
  } catch (const nmg::Error& e) {
    return e.code();
  }
  return std::nullopt;
}
