#ifndef CAYSPEC_REPORT_JSON_HPP
#define CAYSPEC_REPORT_JSON_HPP

#include <json.hpp>

#include "cayspec/integrality.hpp"
#include "cayspec/scan.hpp"

namespace cayspec {

using nlohmann::json;

json to_json(const IntPolynomial& p);
IntPolynomial polynomial_from_json(const json& j);

json to_json(const GcmNode& node);
json to_json(const GcmTree& tree);

json to_json(const PartitionBlock& b);
PartitionBlock block_from_json(const json& j);

json to_json(const SpectrumReport& r);
SpectrumReport spectrum_report_from_json(const json& j);

json to_json(const Verdict& v);

json to_json(const ScanRecord& r);
ScanRecord scan_record_from_json(const json& j);

bool operator==(const ScanRecord& a, const ScanRecord& b);

} // namespace cayspec

#endif
