#ifndef QPROOF_EXPRES_ORACLE_HPP_
#define QPROOF_EXPRES_ORACLE_HPP_

#include <cstddef>
#include <stdexcept>

#include "qproof/expansion.hpp"
#include "qproof/qbf.hpp"

namespace qproof {

class oracle_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleLimits {
  size_t max_expansion_clauses = 4096;
  // Safety valve for elimination blowup on adversarial inputs.
  size_t max_derived_clauses = size_t{1} << 20;
};

/// Brute-force refutation generator: downloads the full universal expansion
/// as axioms, then eliminates variables in ascending id order, recording
/// resolvents. Throws oracle_error("formula is true") on true inputs and
/// oracle_error("bound exceeded") past the limits.
ExpansionProof generate_expres_refutation(const Qbf& f,
                                          const OracleLimits& limits = {});

}  // namespace qproof

#endif  // QPROOF_EXPRES_ORACLE_HPP_
