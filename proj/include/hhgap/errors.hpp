#pragma once

#include <stdexcept>
#include <string>

namespace hhgap {

// Domain errors carry a stable code so the CLI can surface them verbatim.
class Error : public std::runtime_error {
  public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

  private:
    std::string code_;
};

#define HHGAP_ERROR_KIND(Name)                                        \
    struct Name : Error {                                             \
        explicit Name(const std::string& what) : Error(#Name, what) {} \
    }

HHGAP_ERROR_KIND(UnsupportedRing);
HHGAP_ERROR_KIND(UnsupportedBase);
HHGAP_ERROR_KIND(NotGraded);
HHGAP_ERROR_KIND(NotAHomomorphism);
HHGAP_ERROR_KIND(NonMinimalGenerators);
HHGAP_ERROR_KIND(StrategyInapplicable);
HHGAP_ERROR_KIND(LiftFailure);
HHGAP_ERROR_KIND(InfiniteDimensional);
HHGAP_ERROR_KIND(NoMaximalIdeal);
HHGAP_ERROR_KIND(ParseError);
HHGAP_ERROR_KIND(InsufficientRange);

#undef HHGAP_ERROR_KIND

}  // namespace hhgap
