#include "tanglekit/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>

#include "tanglekit/classify.hpp"

namespace tanglekit::report {

namespace fs = std::filesystem;

namespace {

using oracle::SurgeryCheck;
using oracle::verify_surgery;
using solver::solve_2k_to_2k1;
using solver::solve_nonband_family;
using solver::solve_trefoil_hopf;
using solver::psi_move_solve;
using solver::XerFamily;

std::string verify_tag(const SurgeryCheck& chk) {
  if (chk.cap_exceeded) return "cap-exceeded: unverified";
  return chk.ok ? "oracle" : "fails: " + chk.detail;
}

// Xer catenane table for one k: products grouped by (link, U), both
// chirality classes, each row oracle-checked against N(U+0) = N(2k) with
// linking number -k.
json xer_table(const std::string& name, std::int64_t k) {
  const std::int64_t w = -1;
  json out;
  out["schema"] = kSchema;
  out["table"] = name;
  out["substrate"] = "N(" + std::to_string(2 * k) + "), lk = " +
                     std::to_string(-k);
  out["k"] = k;
  out["w"] = w;
  // group the ordered-sum families by (product link, printed U)
  std::map<std::string, json> rows;
  std::vector<std::string> order;
  for (const XerFamily& fam : solve_2k_to_2k1(k, w)) {
    std::string product = fam.product_link.to_string();
    if (fam.product_name) product = fam.product_name->to_string();
    std::string ustr =
        fam.U_value ? fam.U_value->to_string() : to_string(fam.U);
    std::string key = product + "|" + ustr;
    if (!rows.count(key)) {
      order.push_back(key);
      json row;
      row["product"] = product;
      row["N"] = fam.product.to_string();
      row["b"] = fam.product_link.to_string();
      row["U"] = ustr;
      row["m_n"] = json::array();
      SurgeryCheck chk = verify_surgery(
          fam.U, TangleExpr::leaf(TangleFraction(0, 1)),
          TangleExpr::leaf(TangleFraction::integer(w)),
          TwoBridgeLink::from_fraction(TangleFraction::integer(2 * k)),
          TwoBridgeLink::from_fraction(fam.product), -k, std::nullopt);
      row["verified"] = verify_tag(chk);
      rows.emplace(key, std::move(row));
    }
    rows[key]["m_n"].push_back(json::array({fam.m, fam.n}));
  }
  out["rows"] = json::array();
  for (const auto& key : order) out["rows"].push_back(rows[key]);
  return out;
}

json trefoil_hopf_table() {
  json out;
  out["schema"] = kSchema;
  out["table"] = "cor_4_6";
  out["substrate"] = "trefoil N(3)";
  out["product"] = "hopf N(2)";
  out["rows"] = json::array();
  for (std::int64_t w = -5; w <= 5; ++w) {
    TangleFraction u = solve_trefoil_hopf(w);
    json row;
    row["w"] = w;
    row["U"] = u.to_string();
    ExprPtr ue = TangleExpr::leaf(u);
    SurgeryCheck chk = verify_surgery(
        ue, TangleExpr::leaf(TangleFraction(0, 1)),
        TangleExpr::leaf(TangleFraction(1, w)),
        TwoBridgeLink::two_bridge(3, 1), TwoBridgeLink::two_bridge(2, 1),
        std::nullopt, std::nullopt);
    row["verified"] = verify_tag(chk);
    out["rows"].push_back(row);
  }
  return out;
}

json psi_table(const std::string& name, std::int64_t k,
               const std::vector<std::pair<std::string, TangleFraction>>&
                   products) {
  json out;
  out["schema"] = kSchema;
  out["table"] = name;
  out["move"] = "(-1/3, -4/3)";
  out["substrate"] = "N(" + std::to_string(2 * k) + ")";
  out["rows"] = json::array();
  for (const auto& [label, zv] : products) {
    json row;
    row["product"] = label;
    row["z_v"] = zv.to_string();
    auto sols = psi_move_solve(k, zv);
    if (sols.empty()) {
      row["solution"] = "none";
    } else {
      json us = json::array();
      for (const auto& s : sols) us.push_back(s.U_psi.to_string());
      row["solution"] = us.size() == 1 ? us[0] : us;
      json detail = json::array();
      for (const auto& s : sols) {
        json dj;
        dj["v_prime"] = s.v_prime;
        dj["h"] = s.h;
        dj["U_zero_form"] = s.U_zero.to_string();
        detail.push_back(dj);
      }
      row["translated"] = detail;
    }
    out["rows"].push_back(row);
  }
  return out;
}

json nonband_table(const std::string& name, std::int64_t k,
                   const std::vector<std::pair<std::string, TangleFraction>>&
                       products) {
  json out;
  out["schema"] = kSchema;
  out["table"] = name;
  out["substrate"] = "N(" + std::to_string(2 * k) + ")";
  out["condition"] = "t != +-1";
  out["rows"] = json::array();
  for (const auto& [label, zv] : products) {
    solver::NonBandFamily fam = solve_nonband_family(k, zv);
    json row;
    row["product"] = label;
    row["z_v"] = zv.to_string();
    row["t_w"] = fam.tw_form;
    row["U"] = fam.u_form;
    row["v_prime_residues_mod_z"] = fam.residues;
    // no non-rational generalized-M solutions: exhaustive divisor scan
    row["nonrational_candidates"] =
        static_cast<int>(solver::scan_nonrational_genM(k, zv).size());
    out["rows"].push_back(row);
  }
  return out;
}

const std::vector<std::pair<std::string, TangleFraction>>& products_6() {
  static const std::vector<std::pair<std::string, TangleFraction>> v{
      {"7_2", TangleFraction(11, 2)}, {"7_4", TangleFraction(15, 4)}};
  return v;
}
const std::vector<std::pair<std::string, TangleFraction>>& products_8() {
  static const std::vector<std::pair<std::string, TangleFraction>> v{
      {"9_2", TangleFraction(15, 2)}, {"9_5", TangleFraction(23, 4)}};
  return v;
}
const std::vector<std::pair<std::string, TangleFraction>>& products_10() {
  static const std::vector<std::pair<std::string, TangleFraction>> v{
      {"11a247", TangleFraction(19, 2)},
      {"11a343", TangleFraction(31, 4)},
      {"11a363", TangleFraction(35, 6)}};
  return v;
}

}  // namespace

json instance_json(const ExprPtr& u, const std::string& p,
                   const std::string& r, const std::string& substrate,
                   const std::string& product, const std::string& verified) {
  json j;
  j["U_expr"] = to_string(u);
  j["P"] = p;
  j["R"] = r;
  j["substrate"] = substrate;
  j["product"] = product;
  j["verified"] = verified;
  return j;
}

std::vector<std::string> golden_names() {
  return {"cor_4_3", "cor_4_4", "cor_4_5", "cor_4_6", "cor_6_7",
          "cor_6_8", "cor_6_9", "thm_6_1", "thm_6_2", "thm_6_3"};
}

json golden_table(const std::string& name) {
  if (name == "cor_4_3") return xer_table(name, 3);
  if (name == "cor_4_4") return xer_table(name, 4);
  if (name == "cor_4_5") return xer_table(name, 5);
  if (name == "cor_4_6") return trefoil_hopf_table();
  if (name == "cor_6_7") return psi_table(name, 3, products_6());
  if (name == "cor_6_8") return psi_table(name, 4, products_8());
  if (name == "cor_6_9") return psi_table(name, 5, products_10());
  if (name == "thm_6_1") return nonband_table(name, 3, products_6());
  if (name == "thm_6_2") return nonband_table(name, 4, products_8());
  if (name == "thm_6_3") return nonband_table(name, 5, products_10());
  throw std::invalid_argument("unknown golden table: " + name);
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<GoldenResult> run_golden(const std::string& dir) {
  if (!fs::is_directory(dir))
    throw std::runtime_error("golden corpus directory missing: " + dir);
  std::vector<GoldenResult> out;
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  if (files.empty())
    throw std::runtime_error("golden corpus is empty: " + dir);
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    GoldenResult res;
    res.name = path.stem().string();
    std::ifstream in(path, std::ios::binary);
    std::string expected((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
    std::string actual;
    try {
      actual = dump(golden_table(res.name));
    } catch (const std::exception& e) {
      res.ok = false;
      res.diff = e.what();
      out.push_back(res);
      continue;
    }
    res.ok = actual == expected;
    if (!res.ok) {
      std::size_t i = 0;
      while (i < actual.size() && i < expected.size() &&
             actual[i] == expected[i])
        ++i;
      res.diff = "first difference at byte " + std::to_string(i) +
                 ": expected \"" + expected.substr(i, 40) + "...\" got \"" +
                 actual.substr(i, 40) + "...\"";
    }
    out.push_back(res);
  }
  return out;
}

void write_golden(const std::string& dir) {
  fs::create_directories(dir);
  for (const auto& name : golden_names()) {
    std::ofstream outf(fs::path(dir) / (name + ".json"), std::ios::binary);
    outf << dump(golden_table(name));
  }
}

}  // namespace tanglekit::report
