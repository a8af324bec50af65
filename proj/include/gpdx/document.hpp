// Structure documents.
//
// Every structure is stored as one JSON document with a "kind" tag and a
// "version".  Child structures are embedded inline.  Composition tables list
// only composable pairs; inverses and derived flags are never written.
//
// The canonical form is byte-stable: keys sorted, ids and records in
// lexicographic order, two-space indentation, and every array or object
// whose members are all scalars written on one line.  The pretty form is a
// plain-text listing for reading and is not parsed back.
//
//   {"kind": "groupoid", "objects", "arrows" [{id, src, dst}],
//    "identities" {object: arrow}, "compose" [[f, g, fg]]}
//   {"kind": "xmod", "base" <groupoid>, "total" <groupoid>,
//    "boundary" {m: a}, "action" [[m, a, m^a]]}
//   {"kind": "dgpd", "edges" <groupoid>, "squares" [{id, top, bottom, left,
//    right}], "hcompose", "vcompose" [[u, v, uv]], "hident", "vident"
//    {edge: square}, optional "thin" [[a, c, b, d, square]]}
//   {"kind": "sub-witness", "level": "groupoid" | "xmod" | "dgpd",
//    "objects", and "arrows" | "total" + "base" | "edges" + "squares"}
//   {"kind": "morphism", "level", "source", "target" (embedded bodies),
//    "objects", and "arrows" | "total" + "base" | "edges" + "squares" as
//    {source id: target id}}

#ifndef GPDX_DOCUMENT_HPP_
#define GPDX_DOCUMENT_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gpdx/dgpd.hpp"
#include "gpdx/groupoid.hpp"
#include "gpdx/xmod.hpp"

namespace gpdx::io {

  inline constexpr int kVersion = 1;

  enum class Format { canonical, pretty };

  enum class Kind { groupoid, xmod, dgpd, sub_witness, morphism };
  enum class Level { groupoid, xmod, dgpd };

  std::string_view to_string(Kind k) noexcept;
  std::string_view to_string(Level l) noexcept;

  // Ids of a substructure.  `arrows` holds the arrows of a subgroupoid, the
  // base arrows Q of a subcrossed module or the edges of a subdouble
  // groupoid; `cells` holds the module arrows N or the squares.
  struct SubDocument {
    Level                    level = Level::groupoid;
    std::vector<std::string> objects;
    std::vector<std::string> arrows;
    std::vector<std::string> cells;
  };

  using StructureData = std::variant<GroupoidData, XModData, DGpdData>;

  struct MorphismDocument {
    Level                              level = Level::groupoid;
    StructureData                      source;
    StructureData                      target;
    std::map<std::string, std::string> objects;
    std::map<std::string, std::string> arrows;  // arrows, base or edges
    std::map<std::string, std::string> cells;   // total or squares
  };

  using Document = std::variant<GroupoidData, XModData, DGpdData, SubDocument,
                                MorphismDocument>;

  // Syntax and schema only; ids are resolved later.  Throws
  // Error(parse_error) citing the line or the field path, and
  // Error(unknown_kind).
  Document parse(std::string_view text);

  Kind kind_of(Document const& d) noexcept;

  // Parse, check the kind and validate.  Unresolved ids are reported as
  // Error(parse_error) naming the id; a failed validation throws
  // Error(axiom_violation) carrying the report.
  FiniteGroupoid read_groupoid(std::string_view text);
  CrossedModule  read_xmod(std::string_view text);
  DoubleGroupoid read_dgpd(std::string_view text);

  // Resolve a data body.  Dangling ids become Error(parse_error).
  Checked<FiniteGroupoid> build(GroupoidData const& d);
  Checked<CrossedModule>  build(XModData const& d);
  Checked<DoubleGroupoid> build(DGpdData const& d);

  // Resolve a substructure against its parent.  The level must match.
  SubgroupoidWitness resolve_sub(FiniteGroupoid const& parent,
                                 SubDocument const&    d);
  SubXModWitness     resolve_sub(CrossedModule const& parent,
                                 SubDocument const&   d);
  SubDGpdWitness     resolve_sub(DoubleGroupoid const& parent,
                                 SubDocument const&    d,
                                 bool                  mirror_v = false);

  using Morphism = std::variant<GroupoidMorphism, XModMorphism, DGpdMorphism>;

  // Builds both ends and the maps; Error(axiom_violation) with the report
  // if the maps do not form a morphism.
  Morphism resolve_morphism(MorphismDocument const& d);

  std::string serialize(FiniteGroupoid const& g, Format f = Format::canonical);
  std::string serialize(CrossedModule const& x, Format f = Format::canonical);
  std::string serialize(DoubleGroupoid const& g, Format f = Format::canonical);
  std::string serialize(SubDocument const& s, Format f = Format::canonical);
  std::string serialize(GroupoidMorphism const& m,
                        Format                  f = Format::canonical);
  std::string serialize(XModMorphism const& m, Format f = Format::canonical);
  std::string serialize(DGpdMorphism const& m, Format f = Format::canonical);

  SubDocument to_document(SubgroupoidWitness const& w);
  SubDocument to_document(SubXModWitness const& w);
  SubDocument to_document(SubDGpdWitness const& w);

  // 64-bit FNV-1a of a byte string, for golden digests.
  std::uint64_t fnv1a(std::string_view bytes) noexcept;

}  // namespace gpdx::io

#endif  // GPDX_DOCUMENT_HPP_
