// Copyright 2026 The dagdepth Authors
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

// Command-line surface. Exit codes: 0 success/valid/win, 2 invalid/lose/
// not-mergeable (witness or trace on stdout), 1 usage, parse, or limit
// errors (message on stderr). `-` reads stdin.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <dagdepth/dagdepth.hpp>

namespace {

using namespace dagdepth;

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Digraph load_digraph(const std::string& path) {
  try {
    return parse_digraph(slurp(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

Decomposition load_decomposition(const std::string& path) {
  try {
    return parse_decomposition(slurp(path));
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw Error(out_path + ": cannot write file");
  out << text;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

const char* text_of(bool b) { return b ? "true" : "false"; }

Digraph make_family(const std::string& family, int n, bool n_given) {
  if (family == "fig1" || family == "fig2") {
    if (n_given) throw Error("family '" + family + "' takes no parameter");
    return family == "fig1" ? gen_fig1() : gen_fig2();
  }
  if (!n_given) throw Error("family '" + family + "' needs a size parameter");
  if (family == "expo") return gen_expo(n);
  if (family == "path") return gen_path(n);
  if (family == "bicomplete") return gen_bicomplete(n);
  throw Error("unknown family '" + family +
              "' (expected expo, fig1, fig2, path, or bicomplete)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DAG-depth toolkit: exact depth, decompositions, and"
               " verification of the decomposition-guided cop strategy"};
  app.require_subcommand(1);

  std::string ddp_graph;
  int ddp_limit = kDefaultDdpLimit;
  CLI::App* c_ddp = app.add_subcommand("ddp", "Print the exact DAG-depth");
  c_ddp->add_option("graph", ddp_graph, ".dg file (- for stdin)")->required();
  c_ddp->add_option("--limit", ddp_limit, "vertex limit");

  std::string dc_graph, dc_out;
  int dc_limit = kDefaultDdpLimit;
  bool dc_reduce = false;
  CLI::App* c_dec = app.add_subcommand(
      "decompose", "Build a valid optimal decomposition (.dec)");
  c_dec->add_option("graph", dc_graph, ".dg file (- for stdin)")->required();
  c_dec->add_flag("--reduce", dc_reduce, "greedily merge copies afterwards");
  c_dec->add_option("-o", dc_out, "write to file instead of stdout");
  c_dec->add_option("--limit", dc_limit, "vertex limit");

  std::string va_graph, va_dec;
  CLI::App* c_val = app.add_subcommand(
      "validate", "Check the neighbor-cover condition of a decomposition");
  c_val->add_option("graph", va_graph, ".dg file (- for stdin)")->required();
  c_val->add_option("dec", va_dec, ".dec file (- for stdin)")->required();

  std::string vf_graph, vf_dec;
  int vf_limit = kDefaultVerifyLimit;
  CLI::App* c_ver = app.add_subcommand(
      "verify", "Exhaustively verify the strategy wins every play");
  c_ver->add_option("graph", vf_graph, ".dg file (- for stdin)")->required();
  c_ver->add_option("dec", vf_dec, ".dec file (- for stdin)")->required();
  c_ver->add_option("--limit", vf_limit, "vertex limit");

  std::string mg_graph, mg_dec;
  std::vector<std::string> mg_pair;
  CLI::App* c_mrg = app.add_subcommand(
      "merge", "Evaluate and apply the merge of two copies");
  c_mrg->add_option("graph", mg_graph, ".dg file (- for stdin)")->required();
  c_mrg->add_option("dec", mg_dec, ".dec file (- for stdin)")->required();
  c_mrg->add_option("--pair", mg_pair, "the two copy-ids to merge")
      ->expected(2)
      ->required();

  std::string rd_graph, rd_dec;
  CLI::App* c_red = app.add_subcommand(
      "reduce", "Greedily merge copies while validity and depth hold");
  c_red->add_option("graph", rd_graph, ".dg file (- for stdin)")->required();
  c_red->add_option("dec", rd_dec, ".dec file (- for stdin)")->required();

  std::string cl_graph, cl_dec, cl_out;
  CLI::App* c_clo = app.add_subcommand(
      "closure", "Largest supergraph keeping the decomposition valid");
  c_clo->add_option("graph", cl_graph, ".dg file (- for stdin)")->required();
  c_clo->add_option("dec", cl_dec, ".dec file (- for stdin)")->required();
  c_clo->add_option("-o", cl_out, "write to file instead of stdout");

  std::string cn_graph;
  int cn_limit = kDefaultCopnumberLimit;
  CLI::App* c_cop = app.add_subcommand(
      "copnumber", "Brute-force lift-free game value (strategy-free)");
  c_cop->add_option("graph", cn_graph, ".dg file (- for stdin)")->required();
  c_cop->add_option("--limit", cn_limit, "vertex limit");

  std::string gn_family, gn_out;
  int gn_n = 0;
  bool gn_n_given = false;
  CLI::App* c_gen = app.add_subcommand("gen", "Generate a fixture digraph");
  c_gen->add_option("family", gn_family,
                    "expo, fig1, fig2, path, or bicomplete")
      ->required();
  c_gen->add_option("n", gn_n, "size parameter (expo, path, bicomplete)");
  c_gen->add_option("-o", gn_out, "write to file instead of stdout");

  std::string xd_file;
  CLI::App* c_dot = app.add_subcommand(
      "export-dot", "Convert a .dg or .dec file to GraphViz text");
  c_dot->add_option("file", xd_file, ".dg or .dec file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }
  gn_n_given = c_gen->count("n") > 0;

  try {
    if (*c_ddp) {
      std::cout << ddp(load_digraph(ddp_graph), ddp_limit) << "\n";
      return 0;
    }
    if (*c_dec) {
      Digraph d = load_digraph(dc_graph);
      Decomposition dec = build_decomposition(d, dc_limit);
      if (dc_reduce) dec = reduce(d, dec);
      emit(serialize_decomposition(dec), dc_out);
      return 0;
    }
    if (*c_val) {
      Digraph d = load_digraph(va_graph);
      Decomposition dec = load_decomposition(va_dec);
      auto viol = check_valid(d, dec);
      if (!viol) {
        std::cout << "VALID\n";
        return 0;
      }
      std::cout << "INVALID copy=" << viol->copy << " org=" << viol->original
                << " neighbor=" << viol->neighbor
                << " witness=" << join(viol->witness_path, ",") << "\n";
      return 2;
    }
    if (*c_ver) {
      Digraph d = load_digraph(vf_graph);
      Decomposition dec = load_decomposition(vf_dec);
      VerifyReport report = verify_strategy(d, dec, vf_limit);
      if (report.win) {
        std::cout << "WIN cops=" << report.max_cops << "\n";
        return 0;
      }
      std::cout << "LOSE\n" << serialize_trace(report.counterexample);
      return 2;
    }
    if (*c_mrg) {
      Digraph d = load_digraph(mg_graph);
      Decomposition dec = load_decomposition(mg_dec);
      MergeVerdict v = merge_verdict(d, dec, mg_pair[0], mg_pair[1]);
      std::cout << "# same_org=" << text_of(v.same_org)
                << "\n# stays_dag=" << text_of(v.stays_dag)
                << "\n# keeps_cover=" << text_of(v.keeps_cover)
                << "\n# keeps_depth=" << text_of(v.keeps_depth) << "\n";
      if (!v.same_org) {
        std::cerr << "cannot merge copies of different originals\n";
        return 1;
      }
      if (!v.mergeable()) return 2;
      std::cout << serialize_decomposition(
          merge_pair(dec, mg_pair[0], mg_pair[1]));
      return 0;
    }
    if (*c_red) {
      Digraph d = load_digraph(rd_graph);
      Decomposition dec = load_decomposition(rd_dec);
      std::cout << serialize_decomposition(reduce(d, dec));
      return 0;
    }
    if (*c_clo) {
      Digraph d = load_digraph(cl_graph);
      Decomposition dec = load_decomposition(cl_dec);
      emit(serialize_digraph(closure(d, dec)), cl_out);
      return 0;
    }
    if (*c_cop) {
      std::cout << copnumber_bruteforce(load_digraph(cn_graph), cn_limit)
                << "\n";
      return 0;
    }
    if (*c_gen) {
      emit(serialize_digraph(make_family(gn_family, gn_n, gn_n_given)),
           gn_out);
      return 0;
    }
    if (*c_dot) {
      std::string text;
      if (xd_file.ends_with(".dg")) {
        text = to_dot(load_digraph(xd_file));
      } else if (xd_file.ends_with(".dec")) {
        text = to_dot(load_decomposition(xd_file));
      } else {
        throw Error(xd_file + ": cannot tell the format (expected .dg or .dec)");
      }
      std::cout << text;
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 1;
}
