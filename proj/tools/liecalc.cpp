// liecalc: command-line front end for the lie library.

#include "lie/lie.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace lie;
using io::Json;

namespace {

struct Options {
  std::string format = "json";
  std::optional<std::size_t> max_dim, depth, max_orbit;
};

/// Reads "@path" as a file, anything else as inline text.
std::string read_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::ifstream in(arg.substr(1));
  if (!in) throw Error(ErrorCode::invalid_argument, "cannot read " + arg.substr(1));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::optional<std::size_t> env_size(const char* name) {
  const char* v = std::getenv(name);
  if (!v || !*v) return std::nullopt;
  try {
    return static_cast<std::size_t>(std::stoull(v));
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_argument, std::string("bad value for ") + name);
  }
}

Limits limits_from(const Options& o) {
  Limits l;
  if (auto v = env_size("LIE_MAX_DIM")) l.max_dim = *v;
  if (auto v = env_size("LIE_DEPTH")) l.max_depth = *v;
  if (auto v = env_size("LIE_MAX_ORBIT")) l.max_orbit = *v;
  if (o.max_dim) l.max_dim = *o.max_dim;
  if (o.depth) l.max_depth = *o.depth;
  if (o.max_orbit) l.max_orbit = *o.max_orbit;
  return l;
}

/// Plain-text rendering: scalars as-is, arrays one item per line, objects "key value".
std::string as_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string out;
    for (const auto& x : j) out += (x.is_string() ? x.get<std::string>() : x.dump()) + "\n";
    return out;
  }
  if (j.is_object()) {
    std::string out;
    for (const auto& [k, v] : j.items()) out += k + " " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    return out;
  }
  return j.dump() + "\n";
}

void emit(const Options& o, const Json& j, const std::string& text = {}) {
  if (o.format == "text")
    std::cout << (text.empty() ? as_text(j) : text);
  else
    std::cout << j.dump(2) << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for simple Lie algebras, their loop and current algebras, and affine characters"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "dot", "text"}))
      ->capture_default_str();
  app.add_option("--max-dim", opt.max_dim, "Largest dimension any expanded character may have (env LIE_MAX_DIM)");
  app.add_option("--depth", opt.depth, "Affine truncation depth, default 6; also caps series orders (env LIE_DEPTH)");
  app.add_option("--max-orbit", opt.max_orbit, "Largest Weyl orbit or ball to enumerate (env LIE_MAX_ORBIT)");

  std::string type, w1, w2, v1, v2, psi, gamma_arg;
  std::int64_t grade = 0, level = 0;
  std::size_t k = 0, order = 0, r = 0, s = 0, n = 0, depth = 6;
  std::function<void()> action;

  auto with_type = [&](CLI::App* sub) { sub->add_option("type", type, "Cartan type, e.g. A2, D6, G2")->required(); };

  auto* roots = app.add_subcommand("roots", "Root data: Cartan matrix, positive roots, highest root, rho");
  with_type(roots);
  roots->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      emit(opt, io::root_system_json(rs));
    };
  });

  auto* chr = app.add_subcommand("char", "Formal character of V(lambda)");
  with_type(chr);
  chr->add_option("weight", w1, "Dominant weight as a JSON array")->required();
  chr->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      CharacterRing ring(rs, limits_from(opt));
      emit(opt, io::to_json(ring.char_irreducible(io::parse_weight(read_arg(w1), rs.rank()))));
    };
  });

  auto* dim = app.add_subcommand("dim", "Dimension of V(lambda)");
  with_type(dim);
  dim->add_option("weight", w1, "Dominant weight as a JSON array")->required();
  dim->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      CharacterRing ring(rs, limits_from(opt));
      emit(opt, io::to_json(ring.dim_irreducible(io::parse_weight(read_arg(w1), rs.rank()))));
    };
  });

  auto* tensor = app.add_subcommand("tensor", "Decompose V(lambda) (x) V(mu)");
  with_type(tensor);
  tensor->add_option("lambda", w1, "Dominant weight")->required();
  tensor->add_option("mu", w2, "Dominant weight")->required();
  tensor->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      CharacterRing ring(rs, limits_from(opt));
      emit(opt, io::to_json(ring.tensor_decompose(io::parse_weight(read_arg(w1), rs.rank()),
                                                  io::parse_weight(read_arg(w2), rs.rank()))));
    };
  });

  auto* ext1 = app.add_subcommand("ext1-loop", "dim Ext^1 between two irreducible loop modules");
  with_type(ext1);
  ext1->add_option("v", v1, "Loop module: JSON [{\"point\":\"p/q\",\"weight\":[...]}] or @file")->required();
  ext1->add_option("w", v2, "Loop module")->required();
  ext1->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      LoopCategory cat(rs, limits_from(opt));
      auto a = io::loop_irrep_from_json(io::parse(read_arg(v1)), rs.rank());
      auto b = io::loop_irrep_from_json(io::parse(read_arg(v2)), rs.rank());
      emit(opt, Json(cat.ext1_dim(a, b)));
    };
  });

  auto* spectral = app.add_subcommand("spectral", "Spectral character of a loop module");
  with_type(spectral);
  spectral->add_option("v", v1, "Loop module")->required();
  spectral->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      LoopCategory cat(rs, limits_from(opt));
      emit(opt, io::to_json(cat.spectral_character(io::loop_irrep_from_json(io::parse(read_arg(v1)), rs.rank()))));
    };
  });

  auto* blocks = app.add_subcommand("blocks", "Group loop modules by block (indices into the argument list)");
  with_type(blocks);
  blocks->add_option("modules", v1, "JSON array of loop modules or @file")->required();
  blocks->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      LoopCategory cat(rs, limits_from(opt));
      const Json mods = io::parse(read_arg(v1));
      if (!mods.is_array()) throw Error(ErrorCode::parse_error, "expected a JSON array of loop modules");
      std::vector<SpectralCharacter> chis;
      for (const auto& m : mods) chis.push_back(cat.spectral_character(io::loop_irrep_from_json(m, rs.rank())));
      std::vector<int> block_of(chis.size(), -1);
      Json out = Json::array();
      for (std::size_t i = 0; i < chis.size(); ++i) {
        if (block_of[i] >= 0) continue;
        Json group = Json::array();
        for (std::size_t j = i; j < chis.size(); ++j)
          if (block_of[j] < 0 && chis[j] == chis[i]) {
            block_of[j] = static_cast<int>(out.size());
            group.push_back(j);
          }
        out.push_back(group);
      }
      emit(opt, out);
    };
  });

  auto* split = app.add_subcommand("split-order", "Splitting order of sum_s lambda_s at points a_s");
  with_type(split);
  split->add_option("parts", v1, "JSON [{\"point\":\"p/q\",\"weight\":[...]}] or @file")->required();
  split->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      LoopCategory cat(rs, limits_from(opt));
      std::vector<std::pair<Weight, Point>> parts;
      for (auto& [a, lam] : io::loop_parts_from_json(io::parse(read_arg(v1)), rs.rank())) parts.emplace_back(lam, a);
      emit(opt, Json(cat.splitting_order(parts)));
    };
  });

  auto* uplus = app.add_subcommand("uplus", "g-module decomposition of the grade-k part of U(g[t]_+)");
  with_type(uplus);
  uplus->add_option("k", k, "Grade")->required();
  uplus->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      GradedCategory cat(rs, limits_from(opt));
      emit(opt, io::to_json(cat.uplus_graded_char(k)));
    };
  });

  auto* quiver = app.add_subcommand("quiver", "Ext-quiver of an interval-closed vertex set");
  with_type(quiver);
  quiver->add_option("--gamma", gamma_arg, "Vertex set: JSON [{\"weight\":[...],\"grade\":r}] or @file")->required();
  quiver->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      GradedCategory cat(rs, limits_from(opt));
      auto q = cat.build_quiver(io::gamma_from_json(io::parse(read_arg(gamma_arg)), rs.rank()));
      if (opt.format == "dot")
        std::cout << io::to_dot(q);
      else
        emit(opt, io::to_json(q));
    };
  });

  auto* phi = app.add_subcommand("phi-psi", "Positive roots maximizing the pairing with psi");
  with_type(phi);
  phi->add_option("psi", psi, "Integral weight")->required();
  phi->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      GradedCategory cat(rs, limits_from(opt));
      emit(opt, io::to_json(cat.phi_psi(io::parse_weight(read_arg(psi), rs.rank()))));
    };
  });

  auto* lower = app.add_subcommand("lower-set", "Dominant elements below (lambda, r) in the psi order");
  with_type(lower);
  lower->add_option("psi", psi, "Integral weight")->required();
  lower->add_option("weight", w1, "Dominant weight of the top element")->required();
  lower->add_option("grade", grade, "Grade of the top element")->required();
  lower->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      GradedCategory cat(rs, limits_from(opt));
      emit(opt, io::to_json(cat.lower_set_psi(io::parse_weight(read_arg(psi), rs.rank()),
                                              {io::parse_weight(read_arg(w1), rs.rank()), grade})));
    };
  });

  auto* affine = app.add_subcommand("affine-char", "Truncated character of an integrable highest-weight module");
  with_type(affine);
  affine->add_option("weight", w1, "Finite part, dominant")->required();
  affine->add_option("level", level, "Level")->required();
  affine->callback([&] {
    action = [&] {
      auto rs = RootSystem::build(type);
      AffineAlgebra aff(rs, limits_from(opt));
      if (opt.depth)
        depth = *opt.depth;
      else if (auto v = env_size("LIE_DEPTH"))
        depth = *v;
      auto lam = aff.embed(io::parse_weight(read_arg(w1), rs.rank()), level);
      emit(opt, io::to_json(aff.character(lam, depth), aff));
    };
  });

  auto* garland = app.add_subcommand("garland", "Coefficient of u^s in exp(-sum_k L_k u^k / k)");
  garland->add_option("--order", order, "s")->required();
  garland->callback([&] {
    action = [&] {
      auto p = garland_series(order, limits_from(opt).max_depth);
      emit(opt, io::to_json(p), p.str() + "\n");
    };
  });

  auto* zform = app.add_subcommand("zform", "Check the divided-power straightening identity on V(N)");
  zform->add_option("--r", r, "Power of F")->required();
  zform->add_option("--s", s, "Power of E")->required();
  zform->add_option("--N", n, "Highest weight of the sl2 module")->required();
  zform->callback([&] { action = [&] { emit(opt, Json(zform_check(r, s, n))); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (opt.format == "dot" && !quiver->parsed()) {
    std::cerr << "--format dot is only available for quiver\n";
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    std::cerr << io::error_json(e).dump() << "\n";
    return 1;
  }
  return 0;
}
