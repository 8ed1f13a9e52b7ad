// tanglekit: exact rational-tangle calculus, tangle-equation solvers, and an
// independent diagram oracle for verifying every emitted solution.
//
// Exit codes: 0 solved/computed, 1 no solution / obstructed / unrecognized,
// 2 parse or usage error, 3 unsupported input (crossing cap, mn = 0).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "tanglekit/band_solver.hpp"
#include "tanglekit/classify.hpp"
#include "tanglekit/gamma.hpp"
#include "tanglekit/moves.hpp"
#include "tanglekit/mtangle_solver.hpp"
#include "tanglekit/pathway.hpp"
#include "tanglekit/report.hpp"

using namespace tanglekit;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kNoSolution = 1;
constexpr int kUsage = 2;
constexpr int kUnsupported = 3;

struct Output {
  bool as_json = false;
  json argv_echo = json::array();
  json payload;

  void set(const std::string& key, const json& value) { payload[key] = value; }

  void emit_text(const std::string& text) const {
    if (!as_json) std::cout << text << "\n";
  }

  void flush(int exit_code) const {
    if (as_json) {
      json wrapper;
      wrapper["schema"] = report::kSchema;
      wrapper["version"] = report::kVersion;
      wrapper["command"] = argv_echo;
      wrapper["exit"] = exit_code;
      wrapper["result"] = payload;
      std::cout << wrapper.dump(2) << "\n";
    }
  }
};

TwoBridgeLink link_from_spec(const std::string& spec) {
  return parse_link(spec);
}

std::string classify_payload(const oracle::ClassifyResult& r, Output& out) {
  json j;
  j["recognized"] = r.recognized;
  if (r.recognized) {
    j["link"] = r.link.to_string();
    j["fraction"] = r.link.fraction().to_string();
    if (auto name = lookup_name(r.link)) j["name"] = name->to_string();
  } else {
    j["reason"] = r.reason;
  }
  out.set("classification", j);
  return r.to_string();
}

std::string verified_tag(const oracle::SurgeryCheck& chk) {
  if (chk.cap_exceeded) return "cap-exceeded: unverified";
  return chk.ok ? "oracle" : "fails: " + chk.detail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"rational tangle calculus and tangle-equation solvers"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("-j,--json", as_json, "emit a JSON report");
  int cap = -1;
  app.add_option("--cap", cap, "crossing cap for the diagram oracle");

  // eval
  auto* c_eval = app.add_subcommand("eval", "evaluate a tangle expression");
  std::string eval_expr_text;
  c_eval->add_option("expr", eval_expr_text)->required();

  // closure
  auto* c_closure = app.add_subcommand(
      "closure", "Schubert classification of N(p/q)");
  std::string closure_frac;
  c_closure->add_option("fraction", closure_frac)->required();

  // classify
  auto* c_classify = app.add_subcommand(
      "classify", "oracle classification of a closure N(expr)");
  std::string classify_text, export_path;
  c_classify->add_option("expr", classify_text)->required();
  c_classify->add_option("--export-diagram", export_path,
                         "write the crossing list to a file");

  // move-equiv
  auto* c_move = app.add_subcommand(
      "move-equiv", "move equivalence / reduction to (0,t/w) form");
  std::string move_p, move_r;
  std::int64_t mt = 0, mw = 0, mc = 0, md = 0;
  c_move->add_option("--P", move_p, "move source tangle f1/g1");
  c_move->add_option("--R", move_r, "move target tangle f2/g2");
  auto* opt_t = c_move->add_option("--t", mt);
  c_move->add_option("--w", mw);
  c_move->add_option("--c", mc);
  c_move->add_option("--d", md);

  // solve (generalized M for a fixed move, or the nonband family)
  auto* c_solve = app.add_subcommand(
      "solve", "solve N(U+0)=N(a/b), N(U+t/w)=N(z/v)");
  std::string solve_a, solve_t, solve_z;
  bool solve_family = false, solve_verify = false;
  std::int64_t solve_k = 0;
  c_solve->add_option("--a", solve_a, "substrate fraction a/b");
  c_solve->add_option("--t", solve_t, "move fraction t/w");
  c_solve->add_option("--z", solve_z, "product fraction z/v (or table name)");
  c_solve->add_flag("--family", solve_family,
                    "emit the (v',h) family for substrate N(2k)");
  c_solve->add_option("--k", solve_k, "substrate torus parameter k");
  c_solve->add_flag("--verify", solve_verify);
  std::int64_t h_lo = -3, h_hi = 3;
  c_solve->add_option("--h-lo", h_lo, "family instance range, lower h");
  c_solve->add_option("--h-hi", h_hi, "family instance range, upper h");

  // band-solve
  auto* c_band = app.add_subcommand("band-solve",
                                    "coherent band surgery (four cases)");
  std::int64_t bm = 0, bn = 0, bw = -1, bk = 0, blk = 0;
  c_band->add_option("--m", bm)->required();
  c_band->add_option("--n", bn)->required();
  c_band->add_option("--w", bw);
  c_band->add_option("--k", bk)->required();
  c_band->add_option("--lk", blk)->required();
  bool band_verify = false;
  c_band->add_flag("--verify", band_verify);

  // xer-products
  auto* c_xer = app.add_subcommand(
      "xer-products", "Xer catenane products: N(2k) -> 2k+1 crossing knots");
  std::int64_t xk = 0, xw = -1;
  c_xer->add_option("--k", xk)->required();
  c_xer->add_option("--w", xw);
  bool xer_verify = false;
  c_xer->add_flag("--verify", xer_verify);

  // psi-solve
  auto* c_psi = app.add_subcommand(
      "psi-solve", "(-1/3,-4/3)-move systems on N(2k)");
  std::int64_t pk = 0;
  std::string psi_product;
  c_psi->add_option("--k", pk)->required();
  c_psi->add_option("--product", psi_product)->required();

  // gamma
  auto* c_gamma = app.add_subcommand("gamma",
                                     "is the band core curve unknotted?");
  std::int64_t gm = 0, gn = 0, gp = 0, gq = 0;
  c_gamma->add_option("--m", gm)->required();
  c_gamma->add_option("--n", gn)->required();
  c_gamma->add_option("--p", gp)->required();
  c_gamma->add_option("--q", gq)->required();

  // pathway
  auto* c_path = app.add_subcommand("pathway", "stepwise unlinking report");
  std::int64_t path_k = 0, path_w = -1;
  c_path->add_option("--k", path_k)->required();
  c_path->add_option("--w", path_w);

  // verify
  auto* c_verify = app.add_subcommand(
      "verify", "oracle-check one surgery N(U+P)=K1, N(U+R)=K2");
  std::string vu, vp = "0/1", vr, vk1, vk2;
  std::optional<std::int64_t> vlk;
  std::int64_t vlk_value = 0;
  c_verify->add_option("--u", vu)->required();
  c_verify->add_option("--p", vp);
  c_verify->add_option("--r", vr)->required();
  c_verify->add_option("--k1", vk1)->required();
  c_verify->add_option("--k2", vk2)->required();
  auto* vlk_opt = c_verify->add_option("--lk", vlk_value,
                                       "linking number of the link side");

  // report
  auto* c_report = app.add_subcommand("report",
                                      "regenerate and compare golden tables");
  std::string corpus_dir;
  bool write_fixtures = false;
  c_report->add_option("--corpus", corpus_dir)->required();
  c_report->add_flag("--write", write_fixtures,
                     "write fixtures instead of comparing");

  // signature obstruction
  auto* c_obstruct = app.add_subcommand(
      "obstruction", "Murasugi signature obstruction |s(L)-s(L_b)| >= 2");
  std::string ol, olb;
  std::int64_t ol_lk = 0, olb_lk = 0;
  c_obstruct->add_option("--L", ol)->required();
  auto* ol_lk_opt = c_obstruct->add_option("--L-lk", ol_lk);
  c_obstruct->add_option("--Lb", olb)->required();
  auto* olb_lk_opt = c_obstruct->add_option("--Lb-lk", olb_lk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  Output out;
  out.as_json = as_json;
  for (int i = 1; i < argc; ++i) out.argv_echo.push_back(argv[i]);
  int code = kOk;

  try {
    if (c_eval->parsed()) {
      ExprPtr e = parse_expr(eval_expr_text);
      auto value = rational_value(e);
      out.set("expr", to_string(e));
      out.set("rational", value.has_value());
      if (value) {
        out.set("value", value->to_string());
        out.emit_text(value->to_string());
      } else {
        out.emit_text(to_string(e) + "  [not a rational tangle]");
      }
    } else if (c_closure->parsed()) {
      TwoBridgeLink link =
          TwoBridgeLink::from_fraction(parse_fraction(closure_frac));
      json j;
      j["link"] = link.to_string();
      j["components"] = link.components();
      if (auto name = lookup_name(link)) j["name"] = name->to_string();
      out.set("closure", j);
      std::string text = link.to_string();
      if (auto name = lookup_name(link)) text += " = " + name->to_string();
      out.emit_text(text);
    } else if (c_classify->parsed()) {
      ExprPtr e = parse_expr(classify_text);
      oracle::Diagram d = oracle::diagram_of_closure(e, cap);
      if (!export_path.empty()) {
        std::ofstream f(export_path, std::ios::binary);
        f << d.export_crossing_list();
      }
      oracle::ClassifyResult r = oracle::classify_diagram(d);
      std::string text = classify_payload(r, out);
      out.emit_text(text);
      if (!r.recognized) code = kNoSolution;
    } else if (c_move->parsed()) {
      if (!move_p.empty() || !move_r.empty()) {
        solver::Move m(parse_fraction(move_p), parse_fraction(move_r));
        solver::ZeroForm z = solver::move_to_zero_form(m);
        json j;
        j["t_raw"] = z.t_raw;
        j["w_raw"] = z.w_raw;
        j["e1"] = z.e1;
        j["i1"] = z.i1;
        j["t"] = z.t;
        j["w"] = z.w;
        out.set("zero_form", j);
        out.emit_text("equivalent to (0, " + std::to_string(z.t) + "/" +
                      std::to_string(z.w) + " + " + std::to_string(z.t) +
                      "h)");
      } else if (opt_t->count()) {
        auto h = solver::move_equiv_zero(mt, mw, mc, md);
        out.set("equivalent", h.has_value());
        if (h) {
          out.set("h", *h);
          out.emit_text("equivalent, h = " + std::to_string(*h));
        } else {
          out.emit_text("not equivalent");
          code = kNoSolution;
        }
      } else {
        throw CLI::ValidationError("move-equiv",
                                   "need --P/--R or --t/--w/--c/--d");
      }
    } else if (c_solve->parsed()) {
      if (solve_family) {
        TangleFraction zv = link_from_spec(solve_z).fraction();
        solver::NonBandFamily fam = solver::solve_nonband_family(solve_k, zv);
        json j;
        j["t_w"] = fam.tw_form;
        j["U"] = fam.u_form;
        j["residues"] = fam.residues;
        json inst = json::array();
        for (const auto& i : fam.instances(h_lo, h_hi)) {
          json ij;
          ij["v_prime"] = i.v_prime;
          ij["h"] = i.h;
          ij["t_w"] = i.tw.to_string();
          ij["U"] = i.U.to_string();
          inst.push_back(ij);
        }
        j["instances"] = inst;
        out.set("family", j);
        out.emit_text(fam.tw_form + "; " + fam.u_form);
      } else {
        TangleFraction ab = parse_fraction(solve_a);
        TangleFraction tw = parse_fraction(solve_t);
        TangleFraction zv = link_from_spec(solve_z).fraction();
        auto sols = solver::solve_generalized_M(ab, tw, zv);
        json arr = json::array();
        bool all_ok = true;
        for (const auto& s : sols) {
          json j;
          j["case"] = std::string(1, s.case_tag);
          j["U"] = to_string(s.U);
          if (s.U_value) j["U_value"] = s.U_value->to_string();
          if (s.case_tag == 'b') {
            j["p"] = s.p;
            j["q"] = s.q;
            j["eps"] = s.eps;
            j["h"] = s.h;
          }
          if (solve_verify) {
            oracle::SurgeryCheck chk = oracle::verify_surgery(
                s.U, TangleExpr::leaf(TangleFraction(0, 1)),
                TangleExpr::leaf(tw), TwoBridgeLink::from_fraction(ab),
                TwoBridgeLink::from_fraction(zv), std::nullopt, std::nullopt,
                cap);
            j["verified"] = verified_tag(chk);
            if (!chk.ok && !chk.cap_exceeded) all_ok = false;
          }
          arr.push_back(j);
          out.emit_text("case (" + std::string(1, s.case_tag) +
                        "): U = " + to_string(s.U));
        }
        out.set("solutions", arr);
        if (sols.empty()) {
          out.emit_text("no solution");
          code = kNoSolution;
        } else if (!all_ok) {
          code = kNoSolution;
        }
      }
    } else if (c_band->parsed()) {
      solver::BandSolveResult r =
          solver::band_solve_coherent(bm, bn, bw, {bk, blk});
      json j;
      j["substrate"] = r.substrate.to_string();
      bool all_ok = true;
      switch (r.outcome) {
        case solver::BandOutcome::Obstructed:
          j["outcome"] = "obstructed";
          j["reason"] = r.reason;
          out.emit_text("obstructed: " + r.reason);
          code = kNoSolution;
          break;
        case solver::BandOutcome::Unknown:
          j["outcome"] = "unknown";
          j["reason"] = r.reason;
          out.emit_text("unknown: " + r.reason);
          code = kNoSolution;
          break;
        case solver::BandOutcome::Solutions: {
          j["outcome"] = "solutions";
          json arr = json::array();
          for (const auto& s : r.solutions) {
            json sj;
            sj["theorem_case"] = s.case_label;
            sj["parameters"] = {{"m", bm}, {"n", bn}, {"w", bw}, {"k", bk},
                                {"lk", blk}};
            sj["closed_form"] = to_string(s.U);
            if (s.U_value) sj["U_value"] = s.U_value->to_string();
            if (s.symmetric_dup) sj["note"] = "swap coincides (m = n)";
            std::string tag = "unchecked";
            if (band_verify) {
              oracle::SurgeryCheck chk = oracle::verify_surgery(
                  s.U, TangleExpr::leaf(TangleFraction(0, 1)),
                  TangleExpr::leaf(TangleFraction(1, bw)),
                  TwoBridgeLink::from_fraction(r.substrate),
                  TwoBridgeLink::from_fraction(
                      TangleFraction::integer(2 * bk)),
                  std::nullopt, (int)blk, cap);
              tag = verified_tag(chk);
              if (!chk.ok && !chk.cap_exceeded) all_ok = false;
            }
            sj["instances"] = json::array({report::instance_json(
                s.U, "0/1", TangleFraction(1, bw).to_string(),
                r.substrate.to_string(),
                TangleFraction::integer(2 * bk).to_string(), tag)});
            arr.push_back(sj);
            out.emit_text("case " + std::to_string(s.case_id) + " (" +
                          s.case_label + "): U = " + to_string(s.U));
          }
          j["solutions"] = arr;
          if (r.solutions.empty()) {
            out.emit_text("no case applies: " + r.reason);
            code = kNoSolution;
          }
          break;
        }
      }
      if (!all_ok) code = kNoSolution;
      out.set("band_solve", j);
    } else if (c_xer->parsed()) {
      auto families = solver::solve_2k_to_2k1(xk, xw);
      json arr = json::array();
      for (const auto& f : families) {
        json j;
        j["theorem_case"] = "2k -> 2k+1";
        j["parameters"] = {{"m", f.m}, {"n", f.n}, {"k", xk}, {"w", xw}};
        j["closed_form"] = to_string(f.U);
        if (f.U_value) j["U_value"] = f.U_value->to_string();
        j["product"] = f.product.to_string();
        j["product_link"] = f.product_link.to_string();
        if (f.product_name) j["product_name"] = f.product_name->to_string();
        if (f.symmetric_dup) j["note"] = "swap coincides (m = n)";
        std::string tag = "unchecked";
        if (xer_verify) {
          oracle::SurgeryCheck chk = oracle::verify_surgery(
              f.U, TangleExpr::leaf(TangleFraction(0, 1)),
              TangleExpr::leaf(TangleFraction(1, xw)),
              TwoBridgeLink::from_fraction(TangleFraction::integer(2 * xk)),
              TwoBridgeLink::from_fraction(f.product), (int)-xk,
              std::nullopt, cap);
          tag = verified_tag(chk);
        }
        j["instances"] = json::array({report::instance_json(
            f.U, "0/1", TangleFraction(1, xw).to_string(),
            TangleFraction::integer(2 * xk).to_string(),
            f.product.to_string(), tag)});
        arr.push_back(j);
        std::string label =
            f.product_name ? f.product_name->to_string()
                           : f.product_link.to_string();
        out.emit_text("(m,n) = (" + std::to_string(f.m) + "," +
                      std::to_string(f.n) + "): U = " + to_string(f.U) +
                      "  -> " + label);
      }
      out.set("families", arr);
    } else if (c_psi->parsed()) {
      TwoBridgeLink product = link_from_spec(psi_product);
      TangleFraction zv = product.fraction();
      auto sols = solver::psi_move_solve(pk, zv);
      if (sols.empty()) {
        out.set("solution", "none");
        out.set("reason", "no solution");
        out.emit_text("no solution");
        code = kNoSolution;
      } else {
        json arr = json::array();
        for (const auto& s : sols) {
          json j;
          j["U"] = s.U_psi.to_string();
          j["v_prime"] = s.v_prime;
          j["h"] = s.h;
          j["U_zero_form"] = s.U_zero.to_string();
          arr.push_back(j);
          out.emit_text("U = " + s.U_psi.to_string());
        }
        out.set("solutions", arr);
      }
    } else if (c_gamma->parsed()) {
      bool trivial = solver::gamma_unknot_classify({gm, gn, gp, gq});
      out.set("unknotted", trivial);
      out.emit_text(trivial ? "gamma_b is unknotted"
                            : "gamma_b is knotted");
    } else if (c_path->parsed()) {
      auto steps = solver::pathway_check(path_k, path_w);
      json arr = json::array();
      for (const auto& s : steps) {
        json j;
        j["from"] = s.from;
        j["to"] = s.to;
        if (s.solved_here) {
          j["solution"] = s.solution;
        } else {
          j["citation"] = s.citation;
        }
        arr.push_back(j);
        out.emit_text(s.from + " -> " + s.to + ": " +
                      (s.solved_here ? s.solution : s.citation));
      }
      out.set("steps", arr);
    } else if (c_verify->parsed()) {
      if (vlk_opt->count()) vlk = vlk_value;
      TwoBridgeLink k1 = link_from_spec(vk1), k2 = link_from_spec(vk2);
      std::optional<int> lk1, lk2;
      if (vlk) {
        if (k1.components() == 2)
          lk1 = (int)*vlk;
        else
          lk2 = (int)*vlk;
      }
      oracle::SurgeryCheck chk =
          oracle::verify_surgery(parse_expr(vu), parse_expr(vp),
                                 parse_expr(vr), k1, k2, lk1, lk2, cap);
      json j;
      j["ok"] = chk.ok;
      j["left"] = chk.left.to_string();
      j["right"] = chk.right.to_string();
      if (chk.left_lk) j["left_lk"] = *chk.left_lk;
      if (chk.right_lk) j["right_lk"] = *chk.right_lk;
      if (chk.left_sigma) j["left_sigma"] = *chk.left_sigma;
      if (chk.right_sigma) j["right_sigma"] = *chk.right_sigma;
      if (!chk.ok) j["detail"] = chk.detail;
      out.set("verify", j);
      out.emit_text(chk.ok ? "verified" : "failed: " + chk.detail);
      if (chk.cap_exceeded)
        code = kUnsupported;
      else if (!chk.ok)
        code = kNoSolution;
    } else if (c_report->parsed()) {
      if (write_fixtures) {
        report::write_golden(corpus_dir);
        out.emit_text("fixtures written to " + corpus_dir);
      } else {
        auto results = report::run_golden(corpus_dir);
        json arr = json::array();
        bool all_ok = true;
        for (const auto& r : results) {
          json j;
          j["fixture"] = r.name;
          j["ok"] = r.ok;
          if (!r.ok) j["diff"] = r.diff;
          arr.push_back(j);
          out.emit_text((r.ok ? "PASS " : "FAIL ") + r.name +
                        (r.ok ? "" : ": " + r.diff));
          all_ok &= r.ok;
        }
        out.set("golden", arr);
        if (!all_ok) code = kNoSolution;
      }
    } else if (c_obstruct->parsed()) {
      solver::OrientedLinkSpec l{link_from_spec(ol), std::nullopt};
      solver::OrientedLinkSpec lb{link_from_spec(olb), std::nullopt};
      if (ol_lk_opt->count()) l.lk = ol_lk;
      if (olb_lk_opt->count()) lb.lk = olb_lk;
      auto rep = solver::signature_obstruction(l, lb, cap);
      json j;
      j["sigma_L"] = rep.sigma_l;
      j["sigma_Lb"] = rep.sigma_lb;
      j["verdict"] =
          rep.verdict == solver::Obstruction::Obstructed ? "obstructed"
                                                         : "passes";
      out.set("obstruction", j);
      out.emit_text(j["verdict"].get<std::string>() +
                    " (sigma " + std::to_string(rep.sigma_l) + " vs " +
                    std::to_string(rep.sigma_lb) + ")");
      if (rep.verdict == solver::Obstruction::Obstructed) code = kNoSolution;
    }
  } catch (const ParseError& e) {
    out.set("error", e.what());
    out.emit_text(std::string("parse error: ") + e.what());
    out.flush(kUsage);
    return kUsage;
  } catch (const oracle::CrossingCapExceeded& e) {
    out.set("error", e.what());
    out.emit_text(std::string("unsupported: ") + e.what());
    out.flush(kUnsupported);
    return kUnsupported;
  } catch (const CLI::Error& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::string what = e.what();
    bool unsupported = what.find("out of scope") != std::string::npos;
    out.set("error", what);
    out.emit_text("error: " + what);
    out.flush(unsupported ? kUnsupported : kUsage);
    return unsupported ? kUnsupported : kUsage;
  }

  out.flush(code);
  return code;
}
