#pragma once

// Exact counts behind the weak saturation numbers and the permuted Two
// Families bound. Everything is integer arithmetic on arbitrary precision
// values; nothing here touches floating point.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace wsat {

using BigInt = boost::multiprecision::cpp_int;

enum class CountMethod { enumerated, closed_form };

std::string to_string(CountMethod m);

struct CountResult {
  BigInt value;
  CountMethod method;
};

BigInt binomial(long n, long k);
// d! / (k_1! ... k_m! (d - sum k)!); zero if the parts overflow d.
BigInt multinomial(long d, const std::vector<long>& parts);
BigInt power(long base, long exp);

// q_n(p): tuples x in [n]^d with x_(i) >= p_i for all i, by scanning the
// lattice. p must be sorted, 1 <= p_i <= n, n^d <= 2^24.
CountResult qn_enumerate(int n, const std::vector<int>& p);

// q_n(p) from the multinomial sum over the counts i_j of coordinates in
// [v_j, v_{j+1}), subject to i_1 + .. + i_j <= r_1 + .. + r_j.
CountResult qn_formula(int n, const std::vector<int>& p);

// Number of (i_1..i_m) tuples the multinomial sum ranges over.
std::uint64_t qn_formula_summands(const std::vector<int>& p);

// n^d - q_n(p).
CountResult weak_sat_number(int n, const std::vector<int>& p);

// Bipartite closed form n^2 - (n-p+1)^2 + (q-p)^2 for 1 <= p <= q <= n.
BigInt weak_sat_number_bipartite(int n, int p, int q);

// n^d - prod (n - p_i + 1); p in any order.
CountResult directed_weak_sat_number(int n, const std::vector<int>& p);

// |L_i(t)| = C(d,i) (t-1)^i (n-t+1)^(d-i): tuples with exactly i coordinates below t.
CountResult l_set_size(int n, int d, int i, int t);

// Inclusion-exclusion over nonempty I of {1..d} of |cap_{i in I} L_i(p_i)|.
CountResult w_inclusion_exclusion(int n, const std::vector<int>& p);

// (|L_1(p_1)|, sum_i |L_i(p_i)|), which sandwich the weak saturation number.
std::pair<BigInt, BigInt> w_crude_bounds(int n, const std::vector<int>& p);

// Q(a, b) by enumerating every transversal set S with |S cap U_i| = b_i,
// U_i = [max(a) + b_i], and testing the permutation condition with sorted
// thresholds.
CountResult q_enumerate(const std::vector<int>& a, const std::vector<int>& b);

// Q(a, b) by inclusion-exclusion over nonempty sets of permutations; d <= 4.
CountResult q_formula(const std::vector<int>& a, const std::vector<int>& b);

// For each class, the excess m_i = max(S cap U_i) - b_i (0 when b_i = 0).
// A permutation pi with m_i <= a_pi(i) exists iff sorted(m) <= sorted(a)
// pointwise.
bool permutation_fits(const std::vector<int>& excess, const std::vector<int>& a);

// The permutation chosen when one fits: thresholds and caps are each sorted
// ascending (ties by index) and matched rank by rank. Returns 0-based pi
// with excess[i] <= a[pi[i]], or an empty vector.
std::vector<int> fitting_permutation(const std::vector<int>& excess, const std::vector<int>& a);

// Q(n - p, 1) == q_n(p), both sides enumerated.
bool identity_check(int n, const std::vector<int>& p);

}  // namespace wsat
