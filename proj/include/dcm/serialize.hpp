#ifndef DCM_SERIALIZE_HPP
#define DCM_SERIALIZE_HPP

#include <iosfwd>
#include <map>

#include "json.hpp"

#include "dcm/analysis.hpp"
#include "dcm/profile.hpp"

namespace dcm {

inline constexpr const char* kProfileCsvHeader =
    "name,n,d,F1,F2,F3,L1,L2,L3,N1,N2,N3,N4,T1,T2,flags";

/// Fixed key order; infinities and NaNs travel as the strings "inf",
/// "-inf", "nan". encodings, when present, ride along losslessly.
nlohmann::ordered_json profile_to_json(
    const ComplexityProfile& p,
    const std::map<std::string, std::vector<std::string>>* encodings = nullptr);

ComplexityProfile profile_from_json(const nlohmann::ordered_json& j);

void write_profiles_csv(const ProfileTable& table, std::ostream& out);
void write_profiles_jsonl(const ProfileTable& table, std::ostream& out);

/// Reads a profile table back from either format (sniffed from the extension
/// or a leading '{').
ProfileTable read_profiles(const std::string& path);

}  // namespace dcm

#endif
