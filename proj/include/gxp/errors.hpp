#pragma once

#include <stdexcept>
#include <string>

namespace gxp {

// Base class for all toolkit errors. `code()` is a stable machine-readable
// name used by the CLI to pick exit codes.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define GXP_DEFINE_ERROR(Name)                                 \
  class Name : public Error {                                  \
   public:                                                     \
    explicit Name(const std::string& what = #Name)             \
        : Error(#Name, what) {}                                \
  }

// graph-core
GXP_DEFINE_ERROR(InvalidEdge);
GXP_DEFINE_ERROR(DuplicateEdge);
GXP_DEFINE_ERROR(MissingEdge);
GXP_DEFINE_ERROR(InvalidCut);
GXP_DEFINE_ERROR(TooLargeForExact);
GXP_DEFINE_ERROR(InvalidInput);
GXP_DEFINE_ERROR(InvalidIndex);

// expander-construct
GXP_DEFINE_ERROR(InfeasibleDegree);
GXP_DEFINE_ERROR(CertificationFailed);

// core-gadget
GXP_DEFINE_ERROR(AllocationInfeasible);
GXP_DEFINE_ERROR(NotBipartite);

// dynamic-gadget
GXP_DEFINE_ERROR(CapacityExhausted);

// wters
GXP_DEFINE_ERROR(DensityTooLow);
GXP_DEFINE_ERROR(DensityTooHigh);
GXP_DEFINE_ERROR(IsolatedVertex);
GXP_DEFINE_ERROR(UnsupportedPattern);
GXP_DEFINE_ERROR(HittingSetFailed);
GXP_DEFINE_ERROR(AnchorUnavailable);
GXP_DEFINE_ERROR(UnequalParts);

// oracles
GXP_DEFINE_ERROR(BudgetExceeded);

// io
GXP_DEFINE_ERROR(ParseError);

#undef GXP_DEFINE_ERROR

}  // namespace gxp
