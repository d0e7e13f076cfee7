#pragma once

#include <string>

#include "younggraph/partition.hpp"
#include "younggraph/rational.hpp"

namespace younggraph {

enum class Verdict { holds, fails, not_applicable };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

/// Outcome of one tagged inequality. Sides are oriented so that tag r<i
/// claims lhs ≥ rhs and tag r>î claims lhs ≤ rhs; for ratio forms the lhs is
/// the hatted ratio (μ̂ over λ̂).
struct InequalityCheck {
  Verdict verdict = Verdict::not_applicable;
  BigRat lhs;
  BigRat rhs;
  bool equality = false;
};

/// Applies the orientation fixed by the case tag.
inline InequalityCheck judge(CaseTag tag, BigRat hat_side, BigRat plain_side) {
  InequalityCheck out;
  out.lhs = std::move(hat_side);
  out.rhs = std::move(plain_side);
  out.equality = out.lhs == out.rhs;
  switch (tag) {
    case CaseTag::above: out.verdict = out.lhs >= out.rhs ? Verdict::holds : Verdict::fails; break;
    case CaseTag::below: out.verdict = out.lhs <= out.rhs ? Verdict::holds : Verdict::fails; break;
    case CaseTag::between: out.verdict = Verdict::not_applicable; break;
  }
  return out;
}

}  // namespace younggraph
