#include "cayspec/report_json.hpp"

#include "cayspec/version.hpp"

namespace cayspec {

json to_json(const IntPolynomial& p) {
    json coeffs = json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.get_str());
    return json{{"coeffs", coeffs}, {"pretty", p.to_string()}};
}

IntPolynomial polynomial_from_json(const json& j) {
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.emplace_back(c.get<std::string>());
    return IntPolynomial(std::move(coeffs));
}

json to_json(const GcmNode& node) {
    json j;
    switch (node.kind) {
    case GcmNode::Kind::Join: j["kind"] = "join"; break;
    case GcmNode::Kind::Union: j["kind"] = "union"; break;
    case GcmNode::Kind::Multipartite: j["kind"] = "multipartite"; break;
    case GcmNode::Kind::Isolated: j["kind"] = "isolated"; break;
    }
    j["type"] = node.type;
    j["cm_pure"] = node.cm_pure;
    if (node.kind == GcmNode::Kind::Multipartite) j["classes"] = node.classes;
    if (node.kind == GcmNode::Kind::Isolated) j["vertices"] = node.isolated_vertices;
    if (!node.children.empty()) {
        json kids = json::array();
        for (const auto& c : node.children) kids.push_back(to_json(c));
        j["children"] = kids;
    }
    return j;
}

json to_json(const GcmTree& tree) {
    return json{{"type", tree.type_number},
                {"isolated", tree.isolated},
                {"pretty", tree.root.to_string()},
                {"root", to_json(tree.root)}};
}

json to_json(const PartitionBlock& b) {
    json roots = json::object();
    for (auto [r, m] : b.integer_roots) roots[std::to_string(r)] = m;
    return json{{"alpha", b.alpha.parts()},
                {"dim", b.dim},
                {"charpoly", to_json(b.charpoly)},
                {"integer_roots", roots},
                {"remainder", to_json(b.remainder)}};
}

PartitionBlock block_from_json(const json& j) {
    PartitionBlock b{Partition(j.at("alpha").get<std::vector<int>>()),
                     j.at("dim").get<std::int64_t>(),
                     polynomial_from_json(j.at("charpoly")),
                     {},
                     polynomial_from_json(j.at("remainder"))};
    for (auto it = j.at("integer_roots").begin(); it != j.at("integer_roots").end(); ++it)
        b.integer_roots[std::stoll(it.key())] = it.value().get<int>();
    return b;
}

json to_json(const SpectrumReport& r) {
    json t = json::array();
    for (const auto& tr : r.t_set) t.push_back(json::array({tr.i, tr.j}));
    json spec = json::object();
    for (auto [lam, mult] : r.spectrum) spec[std::to_string(lam)] = mult;
    json blocks = json::array();
    for (const auto& b : r.per_partition) blocks.push_back(to_json(b));
    json j{{"n", r.n},
           {"transpositions", t},
           {"eigenvalue_bound", r.t_set.size()}, // |T|-regularity
           {"integral", r.integral},
           {"spectrum", spec},
           {"per_partition", blocks}};
    if (r.witness)
        j["witness"] = json{{"alpha", r.witness->alpha.parts()},
                            {"factor", to_json(r.witness->factor)}};
    else
        j["witness"] = nullptr;
    return j;
}

SpectrumReport spectrum_report_from_json(const json& j) {
    SpectrumReport r;
    r.n = j.at("n").get<int>();
    for (const auto& t : j.at("transpositions"))
        r.t_set.emplace_back(t.at(0).get<int>(), t.at(1).get<int>());
    r.integral = j.at("integral").get<bool>();
    for (auto it = j.at("spectrum").begin(); it != j.at("spectrum").end(); ++it)
        r.spectrum[std::stoll(it.key())] = it.value().get<std::int64_t>();
    if (!j.at("witness").is_null())
        r.witness = SpectrumWitness{
            Partition(j.at("witness").at("alpha").get<std::vector<int>>()),
            polynomial_from_json(j.at("witness").at("factor"))};
    for (const auto& b : j.at("per_partition")) r.per_partition.push_back(block_from_json(b));
    return r;
}

json to_json(const Verdict& v) {
    json j{{"integral", v.integral},
           {"path", to_string(v.path)},
           {"detail", v.detail},
           {"n", v.n},
           {"reduced_n", v.reduced_n},
           {"isolated", v.isolated}};
    if (v.laplacian) {
        json spec = json::object();
        for (auto [lam, mult] : v.laplacian->spectrum) spec[std::to_string(lam)] = mult;
        j["laplacian"] = json{{"integral", v.laplacian->integral},
                              {"spectrum", spec},
                              {"charpoly", to_json(v.laplacian->charpoly)},
                              {"remainder", to_json(v.laplacian->remainder)}};
    } else {
        j["laplacian"] = nullptr;
    }
    j["gcm"] = v.gcm ? to_json(*v.gcm) : json(nullptr);
    j["spectrum_report"] = v.spectrum ? to_json(*v.spectrum) : json(nullptr);
    return j;
}

json to_json(const ScanRecord& r) {
    return json{{"schema_version", r.schema_version},
                {"key", r.key},
                {"n", r.n},
                {"edges", r.edges},
                {"laplacian_integral", r.laplacian_integral},
                {"gcm_present", r.gcm_present},
                {"gcm_type", r.gcm_type},
                {"cayley_integral", r.cayley_integral},
                {"path", r.path},
                {"digest", r.digest},
                {"timestamp", r.timestamp},
                {"version", r.version}};
}

ScanRecord scan_record_from_json(const json& j) {
    ScanRecord r;
    r.schema_version = j.at("schema_version").get<int>();
    r.key = j.at("key").get<std::string>();
    r.n = j.at("n").get<int>();
    r.edges = j.at("edges").get<int>();
    r.laplacian_integral = j.at("laplacian_integral").get<bool>();
    r.gcm_present = j.at("gcm_present").get<bool>();
    r.gcm_type = j.at("gcm_type").get<int>();
    r.cayley_integral = j.at("cayley_integral").get<bool>();
    r.path = j.at("path").get<std::string>();
    r.digest = j.at("digest").get<std::string>();
    r.timestamp = j.at("timestamp").get<std::string>();
    r.version = j.at("version").get<std::string>();
    return r;
}

bool operator==(const ScanRecord& a, const ScanRecord& b) {
    return a.schema_version == b.schema_version && a.key == b.key && a.n == b.n &&
           a.edges == b.edges && a.laplacian_integral == b.laplacian_integral &&
           a.gcm_present == b.gcm_present && a.gcm_type == b.gcm_type &&
           a.cayley_integral == b.cayley_integral && a.path == b.path && a.digest == b.digest &&
           a.timestamp == b.timestamp && a.version == b.version;
}

} // namespace cayspec
