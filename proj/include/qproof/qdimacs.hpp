#ifndef QPROOF_QDIMACS_HPP_
#define QPROOF_QDIMACS_HPP_

#include <iosfwd>
#include <string>

#include "qproof/qbf.hpp"

namespace qproof {

/// QDIMACS: `c` comments, `p cnf <max-var> <num-clauses>`, quantifier lines
/// `a <ids> 0` / `e <ids> 0` in prefix order, then 0-terminated clause lines.
/// Adjacent same-quantifier lines merge into one block. Clauses are
/// canonicalized; tautological clauses are rejected.
Qbf parse_qdimacs(std::istream& in);
Qbf parse_qdimacs_string(const std::string& text);
Qbf parse_qdimacs_file(const std::string& path);

void emit_qdimacs(const Qbf& f, std::ostream& out);
std::string emit_qdimacs_string(const Qbf& f);

}  // namespace qproof

#endif  // QPROOF_QDIMACS_HPP_
