#ifndef ESNKIT_IO_HPP
#define ESNKIT_IO_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "esnkit/affine.hpp"
#include "esnkit/category.hpp"
#include "esnkit/inverse_semigroup.hpp"
#include "esnkit/mcalister.hpp"
#include "esnkit/ordered_groupoid.hpp"

namespace esnkit::io {

// Raw payloads mirroring the JSON schemas. Parsing checks shape, key
// strictness and index ranges (SchemaError); the mathematical validators
// run separately. Files round-trip byte-stably: emit writes sorted keys,
// two-space indentation, LF endings, and no floating point anywhere.
inline constexpr const char* format_version = "esnkit/1";

struct SemigroupData {
  std::vector<std::string> elements;
  IdxTable table;
  std::optional<Idx> zero;
};

struct GroupoidData {
  std::vector<std::string> elements;
  std::vector<Idx> dom, cod, inv;
  IdxTable comp;
  std::optional<BoolMatrix> leq;  // required for ordered_groupoid files
};

struct CategoryData {
  std::vector<std::string> arrows;
  std::vector<Idx> dom, cod;
  IdxTable comp;
};

struct TripleData {
  SemigroupData group;
  std::vector<std::string> poset_elements;
  BoolMatrix poset_leq;
  IdxTable action;
  std::vector<Idx> y;
};

struct AffineData {
  CategoryData category;
  GroupoidData groupoid;
  std::vector<Idx> pi;
  IdxTable action;
};

using BasicPayload = std::variant<SemigroupData, GroupoidData, CategoryData>;

struct MorphismData {
  BasicPayload source;
  BasicPayload target;
  std::vector<Idx> map;
};

using Payload =
    std::variant<SemigroupData, GroupoidData, CategoryData, TripleData, AffineData, MorphismData>;

struct StructureFile {
  Payload payload;
};

std::string kind_of(const StructureFile& f);

// ParseError(line, reason) for malformed JSON; SchemaError(path) for
// unknown kinds/fields, shape and range violations.
StructureFile parse_structure(const std::string& bytes);
std::string emit_structure(const StructureFile& f);

// Bridges between raw payloads and validated core values.
InvSemigroup to_semigroup(const SemigroupData& d);
OrdGroupoid to_ordered_groupoid(const GroupoidData& d);
Groupoid to_plain_groupoid(const GroupoidData& d);
FinCategory to_category(const CategoryData& d);
McAlisterTriple to_triple(const TripleData& d);
GroupoidAction to_action(const AffineData& d);

SemigroupData from_semigroup(const InvSemigroup& s);
GroupoidData from_ordered_groupoid(const OrdGroupoid& g);
GroupoidData from_plain_groupoid(const Groupoid& g);
CategoryData from_category(const FinCategory& c);
TripleData from_triple(const McAlisterTriple& t);
AffineData from_action(const GroupoidAction& a);

}  // namespace esnkit::io

#endif  // ESNKIT_IO_HPP
