#ifndef HYPERQUAD_TESTBED_HPP
#define HYPERQUAD_TESTBED_HPP

#include <vector>

#include "hyperquad/integrand.hpp"
#include "hyperquad/weight.hpp"

namespace hq {

/// Test integrands for dimension d with exact canonical-weight integrals
/// where known. Half-line: monomials x^j (exact Gamma(j+alpha+1)^d),
/// shifted powers (x-1)_+^r (exact (r! e^-1)^d at alpha = 0), the rational
/// 1/(1+x) (exact (e*E1(1))^d at alpha = 0) and the exponential e^-x
/// (exact (Gamma(alpha+1)/2^(alpha+1))^d). Full line: even/odd monomials,
/// 1/(1+x^2) and e^-|x|.
std::vector<Integrand> registry(double alpha, Domain domain, int d);

/// Lookup by name; throws std::invalid_argument when absent.
Integrand find_integrand(const std::string& name, double alpha, Domain domain, int d);

}  // namespace hq

#endif
