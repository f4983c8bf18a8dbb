// Copyright 2026 The sabc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// sabc: check, classify and canonicalize self-adjoint boundary conditions.
//
// Exit codes: 0 success, 1 usage/IO/spec error, 2 not self-adjoint,
// 3 numerical failure. Reports go to stdout as JSON, diagnostics to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sabc/boundary.hpp"
#include "sabc/canonical.hpp"
#include "sabc/fourth_order.hpp"
#include "sabc/generator.hpp"
#include "sabc/io.hpp"

namespace {

using sabc::io::json;

enum exit_code : int {
  exit_ok = 0,
  exit_usage = 1,
  exit_not_self_adjoint = 2,
  exit_numerical = 3,
};

struct Options {
  double tol = sabc::default_tol;
  std::string input = "-";
  std::string output;
  int n = 1;
  std::string class_name;
  std::string sines;
  std::uint64_t seed = 0;
  bool scramble = false;
  std::string form;
  std::string params = "{}";
};

void print(const json& j) { std::cout << j.dump(2) << std::endl; }

sabc::io::Report check_report(const sabc::BoundaryPair& bc, double tol) {
  sabc::io::Report rep;
  rep.selfadjoint = sabc::is_selfadjoint(bc, tol);
  rep.residual = sabc::selfadjoint_residual(bc);
  rep.rank_a = sabc::rank_with_tol(bc.a(), tol);
  rep.rank_b = sabc::rank_with_tol(bc.b(), tol);
  if (!rep.selfadjoint) rep.class_name = sabc::io::not_self_adjoint_class;
  return rep;
}

void fill_class(sabc::io::Report& rep, const sabc::CanonicalForm& cf,
                double tol) {
  const sabc::BCClass cls = sabc::class_of(cf, tol);
  rep.class_name = std::string(sabc::to_string(cls.tag));
  rep.r = cls.r;
  rep.sines = cf.sines;
  rep.cosines = cf.cosines;
}

int cmd_check(const Options& opt) {
  const auto bc = sabc::io::pair_from_json(sabc::io::read_json(opt.input));
  const auto rep = check_report(bc, opt.tol);
  print(rep.to_json());
  return rep.selfadjoint ? exit_ok : exit_not_self_adjoint;
}

// Shared by classify, canon and roundtrip.
int cmd_decompose(const Options& opt, bool write_form, bool with_residual) {
  const auto bc = sabc::io::pair_from_json(sabc::io::read_json(opt.input));
  auto rep = check_report(bc, opt.tol);
  if (!rep.selfadjoint) {
    print(rep.to_json());
    return exit_not_self_adjoint;
  }
  const sabc::CanonicalForm cf = sabc::decompose(bc, opt.tol);
  fill_class(rep, cf, opt.tol);
  if (with_residual) rep.roundtrip_residual = sabc::roundtrip_residual(bc, cf);
  if (write_form) sabc::io::write_json(opt.output, sabc::io::form_to_json(cf));
  print(rep.to_json());
  return exit_ok;
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double v = std::stod(item, &used);
    if (used != item.size()) {
      throw sabc::io::format_error("--sines: cannot parse '" + item + "'");
    }
    values.push_back(v);
  }
  return values;
}

int cmd_gen(const Options& opt) {
  sabc::GenSpec spec;
  spec.n = opt.n;
  spec.seed = opt.seed;
  spec.scramble_rows = opt.scramble;
  if (!opt.sines.empty()) {
    spec.class_request = sabc::ExplicitSines{parse_list(opt.sines)};
  } else if (opt.class_name == "separated") {
    spec.class_request = sabc::BCTag::separated;
  } else if (opt.class_name == "mixed") {
    spec.class_request = sabc::BCTag::mixed;
  } else if (opt.class_name == "coupled") {
    spec.class_request = sabc::BCTag::coupled;
  } else {
    throw sabc::io::format_error("gen: --class or --sines is required");
  }
  const sabc::BoundaryPair bc = sabc::generate(spec);
  sabc::io::write_json(opt.output.empty() ? "-" : opt.output,
                       sabc::io::pair_to_json(bc));
  return exit_ok;
}

double real_param(const json& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) return 0.0;
  if (!it->is_number()) {
    throw sabc::io::format_error(std::string("--params: ") + key +
                                 " must be a real number");
  }
  return it->get<double>();
}

// A bare number or an [re, im] pair.
sabc::complex complex_param(const json& p, const char* key) {
  const auto it = p.find(key);
  if (it == p.end()) return {};
  if (it->is_number()) return {it->get<double>(), 0.0};
  if (it->is_array() && it->size() == 2 && (*it)[0].is_number() &&
      (*it)[1].is_number()) {
    return {(*it)[0].get<double>(), (*it)[1].get<double>()};
  }
  throw sabc::io::format_error(std::string("--params: ") + key +
                               " must be a number or [re, im]");
}

int cmd_hsz(const Options& opt) {
  const json p = opt.params.starts_with('@')
                     ? sabc::io::read_json(opt.params.substr(1))
                     : json::parse(opt.params);
  if (!p.is_object()) throw sabc::io::format_error("--params must be an object");

  const double r1 = real_param(p, "r1"), r2 = real_param(p, "r2");
  const double r3 = real_param(p, "r3"), r4 = real_param(p, "r4");
  const auto a21 = complex_param(p, "a21"), b41 = complex_param(p, "b41");
  const auto a31 = complex_param(p, "a31"), a32 = complex_param(p, "a32");

  std::optional<sabc::CanonicalForm> equivalent;
  std::optional<sabc::BoundaryPair> bc;
  if (opt.form == "separated") {
    const sabc::hsz::Separated s{r1, r2, r3, r4, a21, b41};
    bc = sabc::hsz::separated_pair(s);
    equivalent = sabc::hsz::separated_to_cs(s, opt.tol);
  } else if (opt.form == "coupled") {
    const sabc::hsz::Coupled c{r1, r2, r3, r4, a21, b41, a31, a32,
                               complex_param(p, "a41"), complex_param(p, "a42")};
    bc = sabc::hsz::coupled_pair(c, opt.tol);
    equivalent = sabc::hsz::coupled_to_cs(c, opt.tol);
  } else if (opt.form == "mixed") {
    const sabc::hsz::Mixed m{r1, r2, r3, r4, a21, b41, a31, a32,
                             complex_param(p, "z")};
    bc = sabc::hsz::mixed_pair(m);
  } else {
    throw sabc::io::format_error("hsz: --form must be separated, mixed or coupled");
  }

  if (!opt.output.empty()) {
    sabc::io::write_json(opt.output, sabc::io::pair_to_json(*bc));
  }
  auto rep = check_report(*bc, opt.tol);
  json out;
  if (rep.selfadjoint) {
    const sabc::CanonicalForm cf = sabc::decompose(*bc, opt.tol);
    fill_class(rep, cf, opt.tol);
  }
  out = rep.to_json();
  out["form"] = opt.form;
  if (equivalent) out["equivalent"] = sabc::io::form_to_json(*equivalent);
  print(out);
  return rep.selfadjoint ? exit_ok : exit_not_self_adjoint;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Self-adjoint boundary conditions: check, classify, canonical forms"};
  app.require_subcommand(1);
  Options opt;
  app.add_option("--tol", opt.tol, "tolerance for every rank/zero decision")
      ->check(CLI::PositiveNumber);

  auto add_input = [&opt](CLI::App* sub) {
    sub->add_option("input", opt.input, "matrix-pair JSON file, '-' for stdin");
    sub->fallthrough();
  };

  auto* check = app.add_subcommand("check", "test the self-adjointness condition");
  add_input(check);
  auto* classify = app.add_subcommand("classify", "separated / mixed / coupled");
  add_input(classify);
  auto* canon = app.add_subcommand("canon", "write the canonical-form factors");
  add_input(canon);
  canon->add_option("--output", opt.output, "canonical-form JSON path")->required();
  auto* roundtrip = app.add_subcommand("roundtrip", "decompose, reconstruct, report residual");
  add_input(roundtrip);

  auto* gen = app.add_subcommand("gen", "generate a random self-adjoint pair");
  gen->fallthrough();
  gen->add_option("--n", opt.n, "half-order n")->required()->check(CLI::PositiveNumber);
  gen->add_option("--class", opt.class_name, "separated|mixed|coupled")
      ->check(CLI::IsMember({"separated", "mixed", "coupled"}));
  gen->add_option("--sines", opt.sines, "explicit comma-separated sines in [0,1]");
  gen->add_option("--seed", opt.seed, "64-bit seed");
  gen->add_flag("--scramble", opt.scramble, "left-multiply by a random invertible matrix");
  gen->add_option("--output", opt.output, "output path, '-' for stdout");

  auto* hsz = app.add_subcommand("hsz", "build a fourth-order Hao-Sun-Zettl pair");
  hsz->fallthrough();
  hsz->add_option("--form", opt.form, "separated|mixed|coupled")->required();
  hsz->add_option("--params", opt.params,
                  "JSON object (r1..r4, a21, b41, a31, a32, a41, a42, z) or @file");
  hsz->add_option("--output", opt.output, "write the pair to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e, std::cerr, std::cerr);
    return exit_usage;
  }

  try {
    if (*check) return cmd_check(opt);
    if (*classify) return cmd_decompose(opt, false, false);
    if (*canon) return cmd_decompose(opt, true, true);
    if (*roundtrip) return cmd_decompose(opt, false, true);
    if (*gen) return cmd_gen(opt);
    if (*hsz) return cmd_hsz(opt);
  } catch (const sabc::error& e) {
    std::cerr << "sabc: " << sabc::to_string(e.code()) << ": " << e.what() << '\n';
    if (e.code() == sabc::errc::not_self_adjoint) return exit_not_self_adjoint;
    return e.is_numerical() ? exit_numerical : exit_usage;
  } catch (const sabc::io::format_error& e) {
    std::cerr << "sabc: " << e.what() << '\n';
    return exit_usage;
  } catch (const json::exception& e) {
    std::cerr << "sabc: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::exception& e) {
    std::cerr << "sabc: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
