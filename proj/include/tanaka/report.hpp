#ifndef TANAKA_REPORT_HPP
#define TANAKA_REPORT_HPP

#include <json.hpp>
#include <string>

#include "tanaka/verify.hpp"

namespace tanaka {

// The recorded basis convention, included in reports so runs stay
// reproducible against the same ordering.
inline constexpr const char* kBasisOrderNote =
    "degree-major; within a degree brackets [U,V] sorted by (degree of U, index of U, index of V)";

// Machine reports are key-sorted and carry no timings, so equal configs
// produce byte-identical output.
nlohmann::json machine_verify_report(const VerificationReport& rep);
std::string human_verify_report(const VerificationReport& rep);

nlohmann::json machine_hall_report(int generators, int depth, const std::vector<int>& dims);
nlohmann::json machine_universal_report(const UniversalCRAlgebra& u);
nlohmann::json machine_symbol_report(const CRSymbol& s, const std::vector<int>& real_dims);
nlohmann::json machine_prolong_report(int n, int mu, const ProlongationResult& pr);

std::string render_machine(const nlohmann::json& j);

}  // namespace tanaka

#endif
