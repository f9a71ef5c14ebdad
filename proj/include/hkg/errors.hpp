#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hkg {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// semigroup construction / queries
struct EmptyGenerators : Error {
    EmptyGenerators() : Error("generator list is empty") {}
};
struct InvalidGenerators : Error {
    using Error::Error;
};
struct NonCoprimeGenerators : Error {
    using Error::Error;
};
struct NegativeInput : Error {
    using Error::Error;
};
struct SieveLimitExceeded : Error {
    using Error::Error;
};
struct NotAMember : Error {
    using Error::Error;
};
struct NotTelescopic : Error {
    using Error::Error;
};
struct ResultNotNumerical : Error {
    using Error::Error;
};

// ramification data
struct InvalidData : Error {
    std::vector<std::string> failures;
    explicit InvalidData(std::vector<std::string> f)
        : Error("invalid ramification data: " + join(f)), failures(std::move(f)) {}

  private:
    static std::string join(const std::vector<std::string>& f) {
        std::string s;
        for (const auto& x : f) {
            if (!s.empty()) s += "; ";
            s += x;
        }
        return s;
    }
};
struct NonIntegralGenus : Error {
    using Error::Error;
};
struct NonIntegralLowerJump : Error {
    using Error::Error;
};

// a theorem-level identity failed; always an implementation or data bug
struct IdentityViolation : Error {
    using Error::Error;
};

// catalog / CLI
struct BadParameters : Error {
    using Error::Error;
};
struct UnknownFamily : Error {
    using Error::Error;
};
struct ParseError : Error {
    using Error::Error;
};
struct VerificationMismatch : Error {
    using Error::Error;
};

}  // namespace hkg
