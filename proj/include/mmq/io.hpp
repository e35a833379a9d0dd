#ifndef MMQ_IO_HPP
#define MMQ_IO_HPP

#include <string>

#include <json.hpp>

#include "mmq/delta.hpp"
#include "mmq/matroid.hpp"
#include "mmq/multimatroid.hpp"
#include "mmq/poly.hpp"
#include "mmq/ribbon.hpp"

namespace mmq {

// Object keys keep file order so that "ordering defaults to input order"
// is meaningful for ribbon edge maps.
using Json = nlohmann::ordered_json;

enum class ObjectKind { Multimatroid, Matroid, DeltaMatroid, RibbonGraph };

ObjectKind detect_kind(const Json& doc);
ObjectKind kind_from_name(const std::string& name);
std::string kind_name(ObjectKind kind);

Multimatroid parse_multimatroid(const Json& doc);
Matroid parse_matroid(const Json& doc);
DeltaMatroid parse_delta(const Json& doc);
RibbonGraph parse_ribbon(const Json& doc);

Json to_json(const Multimatroid& z);
Json to_json(const Matroid& m);
Json to_json(const DeltaMatroid& d);
Json to_json(const RibbonGraph& g);

Json poly_to_json(const Poly& p);

} // namespace mmq

#endif
