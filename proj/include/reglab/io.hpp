#pragma once

#include "reglab/families.hpp"
#include "reglab/graph.hpp"
#include "reglab/rational.hpp"
#include "reglab/regularity.hpp"

#include <json.hpp>

#include <string>

namespace reglab::io {

using json = nlohmann::json;

inline constexpr const char* kSchema = "reglab/1";

json to_json(const Rational& r);
json to_json(const VertexSet& s);
json to_json(const AnyGraph& g);
json to_json(const families::Instance& inst);  // graph fields plus labels and family
json to_json(const Partition& p);
json to_json(const regularity::Witness& w);
json to_json(const regularity::Verdict& v);
json to_json(const regularity::PartitionVerdict& v);

// `where` prefixes every error message (usually the file name)
Rational rational_from_json(const json& j, const std::string& where);
AnyGraph graph_from_json(const json& j, const std::string& where);
families::Instance instance_from_json(const json& j, const std::string& where);
Partition partition_from_json(const json& j, std::size_t n, const std::string& where);

json read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);
families::Instance load_instance(const std::string& path);
Partition load_partition(const std::string& path, std::size_t n);

// a label of the instance, or a comma list of vertex ids
VertexSet resolve_selector(const families::Instance& inst, const std::string& sel);
std::vector<int> parse_int_list(const std::string& s, const std::string& what);

}  // namespace reglab::io
