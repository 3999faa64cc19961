#pragma once

// Decision table for the section existence problem: given (n, m), report
// whether a continuous assignment of m new points to n-point configurations
// exists, does not exist, or is not settled, together with the construction
// recipe when one is implemented here.

#include <string>
#include <vector>

#include "confsect/errors.hpp"

namespace confsect::feasibility {

enum class Status { ExistsConstructive, NotExists, Unknown };

struct Verdict {
  Status status = Status::Unknown;
  std::string recipe;    // construction name and parameters, when constructive
  std::string citation;  // which criterion decided it
};

std::string to_string(Status s);

// The four admissible residues 0, (n-1)(n-2), -n(n-2), -(n-2) reduced
// mod n(n-1)(n-2); requires n >= 4.
std::vector<long long> gg_residues(int n);

Verdict decide(int n, long long m);

}  // namespace confsect::feasibility
