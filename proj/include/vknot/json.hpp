#pragma once

#include <json.hpp>

#include "vknot/braids.hpp"
#include "vknot/codes.hpp"
#include "vknot/finite_algebra.hpp"
#include "vknot/homology.hpp"
#include "vknot/laurent1.hpp"
#include "vknot/laurent2.hpp"
#include "vknot/moves.hpp"
#include "vknot/planar_diagram.hpp"
#include "vknot/state_sum.hpp"

namespace vknot {

using Json = nlohmann::json;

// Field names follow the type definitions. Codes, diagrams, biracks, move
// descriptors and braid words also read back.

void to_json(Json& j, const Token& t);
void from_json(const Json& j, Token& t);
void to_json(Json& j, const GaussCode& c);
void from_json(const Json& j, GaussCode& c);

void to_json(Json& j, const IntersectionGraph& g);
void to_json(Json& j, const DiagramStats& s);
void to_json(Json& j, const PDCrossing& c);
void from_json(const Json& j, PDCrossing& c);
void to_json(Json& j, const PlanarDiagram& pd);
void from_json(const Json& j, PlanarDiagram& pd);

/// [[exp, coeff], ...] in ascending exponent order.
void to_json(Json& j, const LaurentPoly1& p);
/// Text form.
void to_json(Json& j, const LaurentPoly2& p);

void to_json(Json& j, const AtomProfile& a);
void to_json(Json& j, const SpanBound& s);

void to_json(Json& j, const Site& s);
void from_json(const Json& j, Site& s);
void to_json(Json& j, const MoveDescriptor& m);
void from_json(const Json& j, MoveDescriptor& m);

void to_json(Json& j, const FiniteBirack& b);
void from_json(const Json& j, FiniteBirack& b);
void to_json(Json& j, const AxiomReport& r);
void to_json(Json& j, const HomologyGroup& h);
void to_json(Json& j, const GroupPresentation& p);

void to_json(Json& j, const BraidWord& w);
void from_json(const Json& j, BraidWord& w);
void to_json(Json& j, const FreeGroupAutomorphism& f);
void to_json(Json& j, const RelationCheck& c);
void to_json(Json& j, const PresentationReport& r);

}  // namespace vknot
