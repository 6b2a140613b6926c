#ifndef PATHHOM_TYPES_HPP
#define PATHHOM_TYPES_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace pathhom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using Vertex = std::string;

// An elementary path of length n is a sequence of n+1 vertex identifiers.
using ElemPath = std::vector<Vertex>;

struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Input/validation problems (CLI exit code 2).
struct InputError : Error {
    explicit InputError(const std::string& what) : Error(what) {}
};

// A verified mathematical property failed to hold (CLI exit code 1).
// These are the interesting failures: theorem-counterexample candidates.
struct PropertyFailure : Error {
    explicit PropertyFailure(const std::string& what) : Error(what) {}
};

inline std::string path_str(const ElemPath& p) {
    std::string s = "[";
    for (size_t i = 0; i < p.size(); ++i) {
        if (i) s += ' ';
        s += p[i];
    }
    s += ']';
    return s;
}

}  // namespace pathhom

#endif
