#pragma once

#include "json.hpp"

#include "expokit/catprof.hpp"
#include "expokit/oracle.hpp"

namespace expokit {

using Json = nlohmann::json;

// Deterministic serialization (lexicographic keys, covering pairs in
// ascending index order); parse(print(x)) is structurally equal to x.
// Parsers throw invalid_instance on malformed or inconsistent input.

Doctrine parse_doctrine(const std::string& s);

Json print_poset(const FinPoset& p);
FinPoset parse_poset(const Json& j);

Json print_lattice(const FinLattice& l);
FinLattice parse_lattice(const Json& j);

Json print_cat(const FinCat& c);
FinCat parse_cat(const Json& j);

Json print_functor(const FinFunctor& f);
FinFunctor parse_functor(const Json& j);

Json print_vertical(Doctrine d, const Vertical& v);
Vertical parse_vertical(Doctrine d, const Json& j);

Json print_over(const ObjectOverB& q);
ObjectOverB parse_over(const Json& j);

Json print_lax(const LaxFunctor& f);
LaxFunctor parse_lax(const Json& j);

Json print_report(const OracleReport& r);

// Poset-shaped over-category view of a glued object (Cat doctrine
// instances are authored in the same total/fibers form).
FinFunctor over_functor(const ObjectOverB& q);

}  // namespace expokit
