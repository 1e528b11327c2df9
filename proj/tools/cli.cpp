#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "latlab/json_io.hpp"
#include "latlab/partitions.hpp"
#include "latlab/reflections.hpp"

namespace latlab {

namespace {

struct LatticeSelector {
  std::string gamma;  // "p,q"
  std::string gram;   // "a,b;c,d;..."
  std::string name;   // II11 | E8 | Gamma22

  void attach(CLI::App* cmd) {
    cmd->add_option("--gamma", gamma, "even self-dual signature p,q");
    cmd->add_option("--gram", gram, "explicit gram matrix, rows ';'-separated");
    cmd->add_option("--std", name, "named lattice: II11, E8 or Gamma22");
  }

  GramLattice build() const {
    const int given = (!gamma.empty()) + (!gram.empty()) + (!name.empty());
    if (given != 1)
      throw std::invalid_argument("give exactly one of --gamma, --gram, --std");
    if (!gamma.empty()) {
      const auto parts = parse_vector(gamma);
      if (parts.size() != 2 || !fits_int64(parts[0]) || !fits_int64(parts[1]))
        throw std::invalid_argument("--gamma wants p,q");
      return GramLattice::gamma(parts[0].convert_to<int>(), parts[1].convert_to<int>());
    }
    if (!gram.empty()) return GramLattice::from_gram(parse_int_matrix(gram));
    if (name == "II11") return GramLattice::standard(StandardLattice::II11);
    if (name == "E8") return GramLattice::standard(StandardLattice::E8);
    if (name == "Gamma22") return gamma22_lattice();
    throw std::invalid_argument("unknown lattice name: '" + name + "'");
  }
};

HeightFunctional functional_from(const std::string& a, const std::string& b,
                                 const std::string& c, const std::string& d) {
  return HeightFunctional{parse_real(a), parse_real(b), parse_real(c), parse_real(d)};
}

std::vector<LatticeVector> parse_vector_list(const std::string& s) {
  std::vector<LatticeVector> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t pos = s.find(';', start);
    const std::string part =
        pos == std::string::npos ? s.substr(start) : s.substr(start, pos - start);
    if (!part.empty()) out.push_back(parse_vector(part));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty vector list");
  return out;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

}  // namespace

int run_cli(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
  CLI::App app{"exact arithmetic for even self-dual lattices and their root systems"};
  app.require_subcommand(1);

  // lattice
  auto* lattice = app.add_subcommand("lattice", "gram-matrix lattices");
  lattice->require_subcommand(1);

  auto* lat_make = lattice->add_subcommand("make", "construct a lattice");
  auto make_sel = std::make_shared<LatticeSelector>();
  make_sel->attach(lat_make);
  lat_make->callback([&out, make_sel] { emit(out, to_json(make_sel->build())); });

  auto* lat_classify = lattice->add_subcommand("classify", "parity, |det| and signature");
  auto cls_sel = std::make_shared<LatticeSelector>();
  cls_sel->attach(lat_classify);
  lat_classify->callback(
      [&out, cls_sel] { emit(out, to_json(cls_sel->build().classify())); });

  auto* lat_enum = lattice->add_subcommand("enum", "vectors of a given norm in a box");
  auto enum_sel = std::make_shared<LatticeSelector>();
  enum_sel->attach(lat_enum);
  auto enum_target = std::make_shared<std::string>();
  auto enum_box = std::make_shared<int>(0);
  lat_enum->add_option("--target", *enum_target, "norm to search for")->required();
  lat_enum->add_option("--box", *enum_box, "max |coordinate|")->required();
  lat_enum->callback([&out, enum_sel, enum_target, enum_box] {
    const GramLattice L = enum_sel->build();
    Int target(boost::multiprecision::numerator(parse_rat(*enum_target)));
    if (boost::multiprecision::denominator(parse_rat(*enum_target)) != 1)
      throw std::invalid_argument("--target must be an integer");
    for (const auto& v : L.enumerate_norm(target, *enum_box)) emit(out, to_json(v));
  });

  // roots (the signature (2,2) lattice in light-cone coordinates)
  auto* roots = app.add_subcommand("roots", "norm-2 vectors of the (2,2) lattice");
  roots->require_subcommand(1);

  auto* roots_enum = roots->add_subcommand("enum", "all roots in a coordinate box");
  auto roots_box = std::make_shared<int>(0);
  roots_enum->add_option("--box", *roots_box, "max |coordinate|")->required();
  roots_enum->callback([&out, roots_box] {
    for (const auto& r : enumerate_roots22(*roots_box)) emit(out, to_json(r));
  });

  auto* roots_test = roots->add_subcommand("test", "root check for one vector");
  auto test_vec = std::make_shared<std::string>();
  roots_test->add_option("--vec", *test_vec, "k,l,m,n")->required();
  roots_test->callback([&out, test_vec] {
    const Vec22 v = parse_vec22(*test_vec);
    emit(out, Json{{"vec", to_json(v)},
                   {"is_root", is_root22(v)},
                   {"norm", to_json(norm22(v))}});
  });

  auto* roots_family = roots->add_subcommand("family", "root family for coprime (l, n)");
  auto fam_l = std::make_shared<std::string>();
  auto fam_n = std::make_shared<std::string>();
  auto fam_t = std::make_shared<std::string>();
  roots_family->add_option("--l", *fam_l, "l")->required();
  roots_family->add_option("--n", *fam_n, "n")->required();
  roots_family->add_option("--t", *fam_t, "also print the member at parameter t");
  roots_family->callback([&out, fam_l, fam_n, fam_t] {
    const RootFamily f = family_for(Int(parse_vector(*fam_l)[0]), Int(parse_vector(*fam_n)[0]));
    if (fam_t->empty()) {
      emit(out, to_json(f));
    } else {
      const Vec22 member = family_member(f, parse_vector(*fam_t)[0]);
      emit(out, Json{{"family", to_json(f)}, {"member", to_json(member)}});
    }
  });

  // reflect
  auto* reflect_cmd = app.add_subcommand("reflect", "apply a norm-2 reflection");
  auto refl_sel = std::make_shared<LatticeSelector>();
  refl_sel->attach(reflect_cmd);
  auto refl_alpha = std::make_shared<std::string>();
  auto refl_vec = std::make_shared<std::string>();
  auto refl_verify = std::make_shared<bool>(true);
  reflect_cmd->add_option("--alpha", *refl_alpha, "mirror vector")->required();
  reflect_cmd->add_option("--vec", *refl_vec, "vector to reflect")->required();
  reflect_cmd->add_flag("--verify,!--no-verify", *refl_verify, "re-check norm preservation");
  reflect_cmd->callback([&out, refl_sel, refl_alpha, refl_vec, refl_verify] {
    const GramLattice L = refl_sel->build();
    const LatticeVector alpha = parse_vector(*refl_alpha);
    const LatticeVector gamma = parse_vector(*refl_vec);
    const LatticeVector image = reflect(L, alpha, gamma);
    if (*refl_verify) {
      if (L.norm(image) != L.norm(gamma) || reflect(L, alpha, image) != gamma)
        throw std::logic_error("reflection verification failed");
    }
    emit(out, to_json(image));
  });

  // orbit
  auto* orbit_cmd = app.add_subcommand("orbit", "bounded reflection orbit");
  auto orb_sel = std::make_shared<LatticeSelector>();
  orb_sel->attach(orbit_cmd);
  auto orb_start = std::make_shared<std::string>();
  auto orb_alphas = std::make_shared<std::string>();
  auto orb_box = std::make_shared<int>(0);
  orbit_cmd->add_option("--start", *orb_start, "starting vector")->required();
  orbit_cmd->add_option("--alphas", *orb_alphas, "mirror vectors, ';'-separated")->required();
  orbit_cmd->add_option("--box", *orb_box, "max |coordinate|")->required();
  orbit_cmd->callback([&out, orb_sel, orb_start, orb_alphas, orb_box] {
    const GramLattice L = orb_sel->build();
    emit(out, to_json(orbit(L, parse_vector(*orb_start),
                            parse_vector_list(*orb_alphas), *orb_box)));
  });

  // weyl refute
  auto* weyl = app.add_subcommand("weyl", "orthogonality certificates");
  weyl->require_subcommand(1);
  auto* weyl_refute = weyl->add_subcommand("refute", "root orthogonal to a vector");
  auto weyl_rho = std::make_shared<std::string>();
  auto weyl_verify = std::make_shared<bool>(true);
  weyl_refute->add_option("--rho", *weyl_rho, "candidate vector k,l,m,n")->required();
  weyl_refute->add_flag("--verify,!--no-verify", *weyl_verify, "re-check the certificate");
  weyl_refute->callback([&out, weyl_rho, weyl_verify] {
    const OrthogonalityCertificate cert = orthogonal_root(parse_vec22(*weyl_rho));
    if (*weyl_verify) {
      if (!certificate_holds(cert) || to_sl2(cert.alpha).mat().det() != 1)
        throw std::logic_error("certificate verification failed");
    }
    emit(out, to_json(cert));
  });

  // height accumulate
  auto* height_cmd = app.add_subcommand("height", "height functionals on roots");
  height_cmd->require_subcommand(1);
  auto* accumulate = height_cmd->add_subcommand(
      "accumulate", "root with certified small or exactly zero height");
  auto h_a = std::make_shared<std::string>("0");
  auto h_b = std::make_shared<std::string>("0");
  auto h_c = std::make_shared<std::string>("0");
  auto h_d = std::make_shared<std::string>("0");
  auto h_eps = std::make_shared<std::string>();
  auto h_budget = std::make_shared<int>(64);
  auto h_verify = std::make_shared<bool>(true);
  accumulate->add_option("--a", *h_a, "coefficient a");
  accumulate->add_option("--b", *h_b, "coefficient b");
  accumulate->add_option("--c", *h_c, "coefficient c");
  accumulate->add_option("--d", *h_d, "coefficient d");
  accumulate->add_option("--epsilon", *h_eps, "target bound (rational)")->required();
  accumulate->add_option("--budget", *h_budget, "convergent deepenings allowed");
  accumulate->add_flag("--verify,!--no-verify", *h_verify, "re-check the outcome");
  accumulate->callback([&out, h_a, h_b, h_c, h_d, h_eps, h_budget, h_verify] {
    const HeightFunctional h = functional_from(*h_a, *h_b, *h_c, *h_d);
    const Rat eps = parse_rat(*h_eps);
    const HeightOutcome outcome = small_height_root(h, eps, *h_budget);
    if (*h_verify) {
      if (!is_root22(outcome.alpha)) throw std::logic_error("outcome is not a root");
      if (outcome.kind == HeightOutcome::Kind::SmallNonzero) {
        Rat prec = eps / 2;
        RatInterval v = height(h, outcome.alpha, prec);
        for (int round = 0; v.contains_zero() && round < 80; ++round) {
          prec /= 16;
          v = height(h, outcome.alpha, prec);
        }
        if (v.contains_zero() || v.abs_upper() >= eps || outcome.bound >= eps)
          throw std::logic_error("outcome certification failed");
      } else {
        const RatInterval v = height(h, outcome.alpha, Rat(1));
        if (!v.is_point() || v.lo != 0) throw std::logic_error("exact zero claim failed");
      }
    }
    emit(out, to_json(outcome));
  });

  // mult
  auto* mult_cmd = app.add_subcommand("mult", "root multiplicities");
  auto mult_rank = std::make_shared<int>(0);
  auto mult_normsq = std::make_shared<std::string>();
  auto mult_range = std::make_shared<std::string>();
  mult_cmd->add_option("--rank", *mult_rank, "lattice rank d")->required();
  mult_cmd->add_option("--normsq", *mult_normsq, "even norm");
  mult_cmd->add_option("--normsq-range", *mult_range,
                       "lo,hi: TSV table over even norms in the range");
  mult_cmd->callback([&out, mult_rank, mult_normsq, mult_range] {
    const bool single = !mult_normsq->empty();
    const bool range = !mult_range->empty();
    if (single == range)
      throw std::invalid_argument("give exactly one of --normsq, --normsq-range");
    if (single) {
      out << root_multiplicity(*mult_rank, parse_vector(*mult_normsq)[0]).str() << "\n";
      return;
    }
    const LatticeVector ends = parse_vector(*mult_range);
    if (ends.size() != 2) throw std::invalid_argument("--normsq-range wants lo,hi");
    for (Int s = ends[0]; s <= ends[1]; ++s) {
      if (s % 2 != 0) continue;
      out << s.str() << "\t" << root_multiplicity(*mult_rank, s).str() << "\n";
    }
  });

  // prospect
  auto* prospect = app.add_subcommand("prospect", "fundamental-root candidate search");
  prospect->require_subcommand(1);

  auto* p_split = prospect->add_subcommand("split", "positive/negative split of roots");
  auto split_box = std::make_shared<int>(0);
  auto split_order = std::make_shared<std::string>("lex");
  auto split_rho = std::make_shared<std::string>();
  auto s_a = std::make_shared<std::string>("0");
  auto s_b = std::make_shared<std::string>("0");
  auto s_c = std::make_shared<std::string>("0");
  auto s_d = std::make_shared<std::string>("0");
  p_split->add_option("--box", *split_box, "root search box")->required();
  p_split->add_option("--order", *split_order, "lex, linear or real");
  p_split->add_option("--rho", *split_rho, "linear ordering vector");
  p_split->add_option("--a", *s_a, "real ordering coefficient a");
  p_split->add_option("--b", *s_b, "real ordering coefficient b");
  p_split->add_option("--c", *s_c, "real ordering coefficient c");
  p_split->add_option("--d", *s_d, "real ordering coefficient d");
  p_split->callback([&out, split_box, split_order, split_rho, s_a, s_b, s_c, s_d] {
    OrderingFunctional ord = OrderingFunctional::lex();
    if (*split_order == "linear") {
      if (split_rho->empty()) throw std::invalid_argument("--order linear needs --rho");
      ord = OrderingFunctional::linear(parse_vec22(*split_rho));
    } else if (*split_order == "real") {
      ord = OrderingFunctional::linear_real(functional_from(*s_a, *s_b, *s_c, *s_d));
    } else if (*split_order != "lex") {
      throw std::invalid_argument("unknown ordering: '" + *split_order + "'");
    }
    emit(out, to_json(split_positive(enumerate_roots22(*split_box), ord)));
  });

  auto* p_cand = prospect->add_subcommand("candidates", "indecomposable positive roots");
  auto cand_box = std::make_shared<int>(0);
  p_cand->add_option("--box", *cand_box, "root search box")->required();
  p_cand->callback([&out, cand_box] {
    const SplitRoots split =
        split_positive(enumerate_roots22(*cand_box), OrderingFunctional::lex());
    emit(out, to_json(indecomposables(split.positives, *cand_box)));
  });

  auto* p_gen = prospect->add_subcommand("generate", "bounded generation check");
  auto gen_box = std::make_shared<int>(0);
  auto gen_cand_box = std::make_shared<int>(0);
  p_gen->add_option("--box", *gen_box, "target root box")->required();
  p_gen->add_option("--candidate-box", *gen_cand_box,
                    "candidate search box (default: --box)");
  p_gen->callback([&out, gen_box, gen_cand_box] {
    const int cbox = *gen_cand_box > 0 ? *gen_cand_box : *gen_box;
    const SplitRoots split =
        split_positive(enumerate_roots22(cbox), OrderingFunctional::lex());
    const CandidateBasis basis = indecomposables(split.positives, cbox);
    emit(out, to_json(generation_check(basis, *gen_box)));
  });

  auto* p_cartan = prospect->add_subcommand("cartan", "generalized Cartan matrix check");
  auto cartan_matrix = std::make_shared<std::string>();
  p_cartan->add_option("--matrix", *cartan_matrix, "rational matrix, rows ';'-separated")
      ->required();
  p_cartan->callback([&out, cartan_matrix] {
    emit(out, to_json(cartan_check(parse_rat_matrix(*cartan_matrix))));
  });

  try {
    app.parse(argc, argv);
    return 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const ZeroOnRoot& e) {
    emit(err, Json{{"error", Json{{"code", e.code()},
                                  {"message", e.what()},
                                  {"root", to_json(e.root)}}}});
    return 1;
  } catch (const Inconclusive& e) {
    emit(err, Json{{"error", Json{{"code", e.code()},
                                  {"message", e.what()},
                                  {"budget", e.budget}}}});
    return 1;
  } catch (const Error& e) {
    emit(err, Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}});
    return 1;
  } catch (const std::invalid_argument& e) {
    emit(err, Json{{"error", Json{{"code", "InvalidArgument"}, {"message", e.what()}}}});
    return 2;
  } catch (const std::exception& e) {
    emit(err, Json{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}});
    return 1;
  }
}

}  // namespace latlab
