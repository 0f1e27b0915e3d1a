#ifndef CAYSPEC_VERSION_HPP
#define CAYSPEC_VERSION_HPP

namespace cayspec {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr int kReportSchemaVersion = 1;

} // namespace cayspec

#endif
