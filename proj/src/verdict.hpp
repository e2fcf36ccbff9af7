#pragma once

namespace fillings {

enum class Verdict { Trivial, Nontrivial, Unknown };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Trivial: return "Trivial";
    case Verdict::Nontrivial: return "Nontrivial";
    default: return "Unknown";
  }
}

} // namespace fillings
