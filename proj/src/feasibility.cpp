#include "confsect/feasibility.hpp"

#include <algorithm>

namespace confsect::feasibility {

std::string to_string(Status s) {
  switch (s) {
    case Status::ExistsConstructive: return "ExistsConstructive";
    case Status::NotExists: return "NotExists";
    default: return "Unknown";
  }
}

std::vector<long long> gg_residues(int n) {
  if (n < 4) throw Error("gg_residues: defined for n >= 4");
  const long long mod = static_cast<long long>(n) * (n - 1) * (n - 2);
  auto reduce = [mod](long long v) { return ((v % mod) + mod) % mod; };
  std::vector<long long> out = {reduce(0), reduce(static_cast<long long>(n - 1) * (n - 2)),
                                reduce(-static_cast<long long>(n) * (n - 2)),
                                reduce(-(static_cast<long long>(n) - 2))};
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool residue_allowed(int n, long long m) {
  const auto rs = gg_residues(n);
  const long long mod = static_cast<long long>(n) * (n - 1) * (n - 2);
  return std::find(rs.begin(), rs.end(), ((m % mod) + mod) % mod) != rs.end();
}

const char* kResidueCitation = "Goncalves-Guaschi residue criterion";

Verdict exists(std::string recipe, std::string citation) {
  return Verdict{Status::ExistsConstructive, std::move(recipe), std::move(citation)};
}

Verdict not_exists(std::string citation) {
  return Verdict{Status::NotExists, "", std::move(citation)};
}

Verdict unknown(std::string citation) { return Verdict{Status::Unknown, "", std::move(citation)}; }

}  // namespace

Verdict decide(int n, long long m) {
  if (n < 3) throw Error("decide: n must be at least 3");
  if (m < 0) throw Error("decide: m must be nonnegative");
  const long long block = static_cast<long long>(n) * (n - 1) * (n - 2);

  if (m == 0) return exists("empty", "trivial section");

  if (n == 3) {
    if (m % 3 == 1) return not_exists(kResidueCitation);
    return exists("section_three(m=" + std::to_string(m) + ")",
                  "cross-ratio fiber construction");
  }

  if (n == 4) {
    // The hybrid case the obstruction table does not settle; no construction
    // for it is implemented here.
    if (m == 4) return unknown("unsettled hybrid case at m = 4");
    if (!residue_allowed(4, m)) return not_exists(kResidueCitation);
    static const long long torsion_list[] = {6, 16, 24, 30, 48, 70};
    const bool in_list =
        std::find(std::begin(torsion_list), std::end(torsion_list), m) != std::end(torsion_list);
    if (in_list || m >= 70)
      return exists("section_four_planned(m=" + std::to_string(m) + ")",
                    "elliptic torsion base plus cabled layers");
    return unknown("allowed residue with no construction below 70");
  }

  if (n == 5) {
    if (m % block == 0)
      return exists("section_general(levels=" + std::to_string(m / block) + ")",
                    "cabling construction (n(n-1)(n-2) | m)");
    if (!residue_allowed(5, m)) return not_exists(kResidueCitation);
    return unknown("allowed residue; the n = 5 case is not settled");
  }

  // n >= 6: divisibility is exactly the boundary.
  if (m % block == 0)
    return exists("section_general(levels=" + std::to_string(m / block) + ")",
                  "cabling construction (n(n-1)(n-2) | m)");
  return not_exists("divisibility obstruction for n >= 6: n(n-1)(n-2) must divide m");
}

}  // namespace confsect::feasibility
