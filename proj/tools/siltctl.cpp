#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "silt/errors.hpp"
#include "silt/explorer.hpp"
#include "silt/fixtures.hpp"
#include "silt/io.hpp"
#include "silt/torsion.hpp"

using namespace silt;
using io::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInput = 2;
constexpr int kCap = 3;

struct Globals {
  std::string field;
  int path_cap = 30;
  int bfs_cap = 2000;
  std::string format = "json";
};

AlgebraPresentation builtin_algebra(const std::string& name, const Field& f) {
  if (name == "A3") return fixtures::a3(f);
  if (name == "N3") return fixtures::n3(f);
  if (name == "K2") return fixtures::k2(f);
  if (name == "SN22") return fixtures::sn22(f);
  if (name == "Kronecker") return fixtures::kronecker(f);
  fail(ErrorKind::Parse, "unknown builtin algebra @" + name + " (A3, N3, K2, SN22, Kronecker)");
}

AlgebraPtr load_algebra(const std::string& ref, const Globals& g) {
  std::optional<Field> f;
  if (!g.field.empty()) f = io::parse_field(g.field);
  if (!ref.empty() && ref[0] == '@') return build_algebra(builtin_algebra(ref.substr(1), f.value_or(Field::rationals())), g.path_cap);
  json j = io::read_file(ref);
  if (f) j["field"] = io::field_to_json(*f);
  return build_algebra(io::algebra_from_json(j), g.path_cap);
}

int vertex_of(const AlgebraPtr& a, const std::string& label) {
  std::string l = label;
  if (l.size() > 2 && l.rfind("S_", 0) == 0) l = l.substr(2);
  return a->quiver().vertex_index(l);
}

// one summand of a complex argument: a file or a builtin, optionally followed by [n]
ProjComplex load_term(const AlgebraPtr& a, std::string ref) {
  int n = 0;
  if (ref.size() > 1 && ref[0] == '@' && ref.back() == ']') {
    std::size_t open = ref.rfind('[');
    require(open != std::string::npos, ErrorKind::Parse, "unbalanced shift in " + ref);
    try {
      n = std::stoi(ref.substr(open + 1, ref.size() - open - 2));
    } catch (const std::logic_error&) {
      fail(ErrorKind::Parse, "bad shift in " + ref);
    }
    ref = ref.substr(0, open);
  }
  ProjComplex x;
  auto arg = [&](const std::string& head) {
    require(ref.size() > head.size() + 1 && ref.back() == ')', ErrorKind::Parse, "bad builtin " + ref);
    return ref.substr(head.size(), ref.size() - head.size() - 1);
  };
  if (ref == "@A") x = regular_complex(a);
  else if (ref.rfind("@P(", 0) == 0) x = stalk(a, {vertex_of(a, arg("@P("))}, 0);
  else if (ref.rfind("@pres(", 0) == 0) x = presentation_complex(simple(a, vertex_of(a, arg("@pres("))));
  else if (!ref.empty() && ref[0] == '@') fail(ErrorKind::Parse, "unknown builtin " + ref + " (@A, @A[n], @P(i), @pres(S_i))");
  else x = io::complex_from_json(a, io::read_file(ref));
  return shift(x, n);
}

// complex argument: terms joined by '+'
ProjComplex load_complex(const AlgebraPtr& a, const std::string& ref) {
  std::vector<ProjComplex> parts;
  std::stringstream ss(ref);
  std::string term;
  while (std::getline(ss, term, '+')) parts.push_back(load_term(a, term));
  require(!parts.empty(), ErrorKind::Parse, "empty complex argument");
  return parts.size() == 1 ? parts[0] : direct_sum(parts);
}

std::vector<int> parse_vertex_list(const AlgebraPtr& a, const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(vertex_of(a, item));
  return out;
}

void emit_record(const SiltingRecord& r, const Globals& g) {
  if (g.format == "text") {
    std::cout << "status: " << to_string(r.status) << "\n" << pretty(r.complex);
    return;
  }
  std::cout << io::dump(io::record_to_json(r));
}

json algebra_info(const AlgebraPtr& a) {
  const NakayamaData& nk = a->nakayama();
  json perm = json::array();
  if (nk.self_injective)
    for (int v : nk.permutation) perm.push_back(a->quiver().vertex(v));
  json cartan = json::array();
  for (int i = 0; i < a->num_vertices(); ++i) {
    json row = json::array();
    for (int j = 0; j < a->num_vertices(); ++j) row.push_back(a->block(i, j).size());
    cartan.push_back(row);
  }
  return {{"presentation", io::algebra_to_json(a->presentation())},
          {"dimension", a->dim()},
          {"loewy_length", a->loewy_bound() - 1},
          {"cartan", cartan},
          {"self_injective", nk.self_injective},
          {"symmetric", !nk.self_injective ? json(false) : nk.symmetric ? json(*nk.symmetric) : json("undecided")},
          {"nakayama_permutation", perm}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Silting objects over finite-dimensional algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--field", g.field, "Ground field: rationals or gf:p");
  app.add_option("--path-cap", g.path_cap, "Longest path tried while building the algebra")->check(CLI::PositiveNumber);
  app.add_option("--bfs-cap", g.bfs_cap, "Node cap for interval enumeration")->check(CLI::PositiveNumber);
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text", "dot"}));

  std::string alg_ref, cx_ref, u_ref, perp_ref, idem, direction = "left", method = "auto";
  int summand = 0, bottom = 1, cap = 32;
  bool shift_identify = false;
  std::function<int()> action;

  auto* algebra = app.add_subcommand("algebra", "Algebra inspection")->require_subcommand(1);
  auto* info = algebra->add_subcommand("info", "Dimension, Cartan matrix and Nakayama data");
  info->add_option("algebra", alg_ref)->required();
  info->callback([&] {
    action = [&] {
      std::cout << io::dump(algebra_info(load_algebra(alg_ref, g)));
      return kOk;
    };
  });
  auto* show = algebra->add_subcommand("show", "Canonical presentation document");
  show->add_option("algebra", alg_ref)->required();
  show->callback([&] {
    action = [&] {
      std::cout << io::dump(io::algebra_to_json(load_algebra(alg_ref, g)->presentation()));
      return kOk;
    };
  });

  auto* silt = app.add_subcommand("silt", "Silting objects")->require_subcommand(1);
  auto* classify_cmd = silt->add_subcommand("classify", "Classify a complex (exit 1 unless silting)");
  classify_cmd->add_option("algebra", alg_ref)->required();
  classify_cmd->add_option("complex", cx_ref)->required();
  classify_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord r = classify(load_complex(a, cx_ref));
      emit_record(r, g);
      return r.at_least(Status::Silting) ? kOk : kFalse;
    };
  });

  auto* mutate_cmd = silt->add_subcommand("mutate", "Irreducible mutation at one summand");
  mutate_cmd->add_option("algebra", alg_ref)->required();
  mutate_cmd->add_option("complex", cx_ref)->required();
  mutate_cmd->add_option("--summand", summand, "Summand index in canonical order")->required();
  mutate_cmd->add_option("--direction", direction)->check(CLI::IsMember({"left", "right"}));
  mutate_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord t = classify(load_complex(a, cx_ref));
      emit_record(mutate(t, summand, direction == "left" ? Direction::Left : Direction::Right), g);
      return kOk;
    };
  });

  auto* complete_cmd = silt->add_subcommand("complete", "Complete a presilting U relative to a silting T");
  complete_cmd->add_option("algebra", alg_ref)->required();
  complete_cmd->add_option("silting", cx_ref)->required();
  complete_cmd->add_option("presilting", u_ref)->required();
  complete_cmd->add_option("--method", method)->check(CLI::IsMember({"auto", "bongartz", "descend"}));
  complete_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord t = classify(load_complex(a, cx_ref));
      ProjComplex u = load_complex(a, u_ref);
      std::string m = method;
      if (m == "auto") m = compare_order(shift(t.complex, -1), u) && compare_order(u, t.complex) ? "bongartz" : "descend";
      if (m == "bongartz") emit_record(bongartz_complete(t, u), g);
      else emit_record(connect_descend(t, u, cap).records.back(), g);
      return kOk;
    };
  });
  complete_cmd->add_option("--cap", cap, "Mutation cap for descent");

  auto* connect_cmd = silt->add_subcommand("connect", "Left-mutation path from T down to U (exit 1 if U is not reached)");
  connect_cmd->add_option("algebra", alg_ref)->required();
  connect_cmd->add_option("from", cx_ref)->required();
  connect_cmd->add_option("to", u_ref)->required();
  connect_cmd->add_option("--cap", cap, "Mutation cap");
  connect_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      MutationPath p = connect_descend(classify(load_complex(a, cx_ref)), load_complex(a, u_ref), cap);
      std::cout << io::dump({{"start", p.start},
                             {"end", p.end},
                             {"reached", p.reached},
                             {"steps", io::steps_to_json(p.steps)},
                             {"final", io::record_to_json(p.records.back())}});
      return p.reached ? kOk : kFalse;
    };
  });

  auto* reduce_cmd = silt->add_subcommand("reduce", "Two-term silting T with T[-l+1] >= P >= T");
  reduce_cmd->add_option("algebra", alg_ref)->required();
  reduce_cmd->add_option("complex", cx_ref)->required();
  reduce_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord p = classify(load_complex(a, cx_ref));
      require(p.at_least(Status::Silting), ErrorKind::NotSilting, "reduction needs a silting input");
      Reduction r = two_term_reduce(p);
      if (g.format == "text") {
        std::cout << "length: " << r.length << "\n";
        emit_record(r.result, g);
      } else {
        std::cout << io::dump(
            {{"length", r.length}, {"tilting_expected", r.tilting_expected}, {"result", io::record_to_json(r.result)}});
      }
      return kOk;
    };
  });

  auto* two_cmd = silt->add_subcommand("two-term", "All basic silting T with A >= T >= A[1]");
  two_cmd->add_option("algebra", alg_ref)->required();
  two_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      std::vector<SiltingRecord> list = two_term_silting(a, g.bfs_cap);
      if (g.format == "text") {
        for (const auto& r : list) std::cout << "status: " << to_string(r.status) << "\n" << pretty(r.complex) << "\n";
        return kOk;
      }
      json out = json::array();
      for (const auto& r : list) out.push_back(io::record_to_json(r));
      std::cout << io::dump(out);
      return kOk;
    };
  });

  auto* quiver_cmd = silt->add_subcommand("quiver", "Silting quiver of the interval [T, T[n]] (exit 3 if incomplete)");
  quiver_cmd->add_option("algebra", alg_ref)->required();
  quiver_cmd->add_option("--top", cx_ref, "Top silting object (default @A)");
  quiver_cmd->add_option("--bottom", bottom, "Shift n of the bottom T[n]")->check(CLI::NonNegativeNumber);
  quiver_cmd->add_flag("--shift-identify", shift_identify, "Identify T with its shifts in the output");
  quiver_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord top = cx_ref.empty() ? regular_record(a) : classify(load_complex(a, cx_ref));
      SiltingQuiverGraph q = enumerate_interval(top, shift(top.complex, bottom), g.bfs_cap);
      if (g.format == "dot") std::cout << export_dot(q, shift_identify);
      else std::cout << io::dump(export_json(q, shift_identify));
      return q.complete ? kOk : kCap;
    };
  });

  auto* torsion = app.add_subcommand("torsion", "Torsion-class constructions")->require_subcommand(1);
  auto* tsilt = torsion->add_subcommand("silt", "Silting object T_C of a torsion class");
  tsilt->add_option("algebra", alg_ref)->required();
  auto* perp_opt = tsilt->add_option("--perp", perp_ref, "Module file M, for the class of X with Hom(X, M) = 0");
  auto* idem_opt = tsilt->add_option("--or-idempotent", idem, "Vertices of e, comma separated");
  perp_opt->excludes(idem_opt);
  tsilt->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      require(!perp_ref.empty() || idem_opt->count() > 0, ErrorKind::InvalidArgument, "give --perp or --or-idempotent");
      if (!perp_ref.empty()) emit_record(torsion_silting(perp_class(io::module_from_json(a, io::read_file(perp_ref)))), g);
      else emit_record(okuyama_rickard(a, parse_vertex_list(a, idem)), g);
      return kOk;
    };
  });

  auto* end_cmd = app.add_subcommand("end-algebra", "Presentation of End(T) for a silting T");
  end_cmd->add_option("algebra", alg_ref)->required();
  end_cmd->add_option("complex", cx_ref)->required();
  end_cmd->callback([&] {
    action = [&] {
      AlgebraPtr a = load_algebra(alg_ref, g);
      SiltingRecord t = classify(load_complex(a, cx_ref));
      require(t.at_least(Status::Silting), ErrorKind::NotSilting, "end-algebra needs a silting complex");
      std::cout << io::dump(io::algebra_to_json(end_algebra(t)));
      return kOk;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInput;
  }
  try {
    return action ? action() : kInput;
  } catch (const Error& e) {
    std::cerr << "siltctl: " << e.what() << "\n";
    return e.kind() == ErrorKind::CapExceeded || e.kind() == ErrorKind::GenerationUndecided ? kCap : kInput;
  } catch (const std::exception& e) {
    std::cerr << "siltctl: " << e.what() << "\n";
    return kInput;
  }
}
