#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "latlab/certified_real.hpp"
#include "latlab/gamma22.hpp"
#include "latlab/heights.hpp"
#include "latlab/lattice.hpp"
#include "latlab/prospector.hpp"
#include "latlab/reflections.hpp"
#include "latlab/weyl_refuter.hpp"

namespace latlab {

using Json = nlohmann::json;

// Integers inside the int64 range stay JSON numbers; larger values become
// decimal strings.
Json to_json(const Int& v);
Json to_json(const LatticeVector& v);
Json to_json(const Vec22& v);
Json to_json(const GramLattice& L);
Json to_json(const LatticeClass& c);
Json to_json(const RootFamily& f);
Json to_json(const OrthogonalityCertificate& c);
Json to_json(const HeightOutcome& o);
Json to_json(const OrbitResult& o);
Json to_json(const SplitRoots& s);
Json to_json(const CandidateBasis& b);
Json to_json(const GenerationReport& r);
Json to_json(const CartanViolation& v);
Json to_json(const std::vector<CartanViolation>& vs);

// "k,l,m,n"
Vec22 parse_vec22(const std::string& s);
// "c1,c2,...,cn"
LatticeVector parse_vector(const std::string& s);
// "p/q", "-3", or a decimal like "1.25" (read exactly).
Rat parse_rat(const std::string& s);
// A rational as above, or a surd "a+b*sqrt(D)" with rational a, b.
CertifiedReal parse_real(const std::string& s);
// Rows split by ';', entries by ','.
std::vector<std::vector<Rat>> parse_rat_matrix(const std::string& s);
std::vector<std::vector<Int>> parse_int_matrix(const std::string& s);

}  // namespace latlab
