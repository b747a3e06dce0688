#ifndef MALFATTI_JSON_IO_HPP
#define MALFATTI_JSON_IO_HPP

#include <string>
#include <vector>

#include "malfatti/construct.hpp"
#include "malfatti/verify.hpp"

namespace malfatti {

/// JSON documents with fixed key order and numbers printed to 17 significant
/// digits, so identical inputs serialize to identical bytes and every double
/// round-trips exactly.

/// {"schema":1, "triangle":{...}, "triplets":[{...}, ...]}
std::string compute_document(const DerivedQuantities& q, const std::vector<Configuration>& configs);

/// {"schema":1, "triangle":{...}, "reports":[{...}, ...], "summary":{...}}
std::string verify_document(const DerivedQuantities& q,
                            const std::vector<VerificationReport>& reports);

}  // namespace malfatti

#endif
