#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ck/diagram.hpp"
#include "ck/group.hpp"
#include "ck/hopfxc.hpp"
#include "ck/labeling.hpp"
#include "ck/moves.hpp"
#include "ck/scalar.hpp"
#include "ck/xmod.hpp"

namespace ck {

using Json = nlohmann::json;

// Parse failures and schema violations fail with ParseError naming the
// offending key; structural soundness beyond JSON shape (group axioms,
// diagram validity, Hopf axioms) is the job of the dedicated checkers.
Json parse_json(const std::string& text);

// Canonical rendering: sorted keys, two-space indent, trailing newline.
// Equal documents render to equal bytes.
std::string dump_json(const Json& j);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

// Top-level documents carry "format": 1; embedded occurrences do not.
// Parsers accept a missing "format" and reject any value other than 1.
Json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

Json xmod_to_json(const CrossedModule& cm);
CrossedModule xmod_from_json(const Json& j);

Json diagram_to_json(const HeegaardDiagram& d);
HeegaardDiagram diagram_from_json(const Json& j);

Json labeling_to_json(const ChiLabeling& lab);
ChiLabeling labeling_from_json(const Json& j);

// The file embeds the field and the crossed module; all structure constants
// render through Scalar::str and re-parse exactly.
Json hopf_to_json(const HopfChiCoalgebra& A);
HopfChiCoalgebra hopf_from_json(const Json& j);

Json move_to_json(const MoveDescriptor& mv);
MoveDescriptor move_from_json(const Json& j);

// {"format": 1, "moves": [...]}; a bare array is accepted on input
Json moves_to_json(const std::vector<MoveDescriptor>& script);
std::vector<MoveDescriptor> moves_from_json(const Json& j);

Json word_to_json(const Word& w);
Word word_from_json(const Json& j);

}  // namespace ck
