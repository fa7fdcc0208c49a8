#pragma once

#include <map>
#include <string>

#include "gkz/arrangement.hpp"

// Shared, lazily built instances so each test file does not redo the
// exact-geometry construction.
namespace fixtures {

inline const gkz::WeightConfig& config(const std::string& name) {
  static std::map<std::string, gkz::WeightConfig> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  gkz::IntMatrix b;
  if (name == "gauss")
    b = gkz::IntMatrix::from_rows({{1, 1, -1, -1}});
  else if (name == "two11")
    b = gkz::IntMatrix::from_rows({{2, -1, -1}});
  else if (name == "minimal")
    b = gkz::IntMatrix::from_rows({{1, -1}});
  else if (name == "squarecross")
    b = gkz::IntMatrix::from_rows({{1, -1, 0, 0, 1, -1}, {0, 0, 1, -1, 1, -1}});
  else
    throw std::runtime_error("unknown fixture " + name);
  return cache.emplace(name, gkz::validate_config(b)).first->second;
}

inline const gkz::FaceComplex& complex(const std::string& name) {
  static std::map<std::string, gkz::FaceComplex> cache;
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;
  return cache.emplace(name, gkz::face_complex(config(name))).first->second;
}

}  // namespace fixtures
