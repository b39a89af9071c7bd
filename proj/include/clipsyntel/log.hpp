#pragma once

#include <iostream>
#include <string>

namespace clipsyntel {

inline void log_warn(const std::string& message) {
  std::cerr << "clipsyntel: warning: " << message << '\n';
}

}  // namespace clipsyntel
