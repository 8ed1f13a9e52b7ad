#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tanglekit/band_solver.hpp"
#include "tanglekit/classify.hpp"
#include "tanglekit/gamma.hpp"
#include "tanglekit/moves.hpp"
#include "tanglekit/mtangle_solver.hpp"
#include "tanglekit/pathway.hpp"
#include "tanglekit/report.hpp"

namespace py = pybind11;
using namespace tanglekit;

namespace {

std::string eval_expr(const std::string& text) {
  auto v = rational_value(parse_expr(text));
  if (!v) throw py::value_error("not a rational tangle: " + text);
  return v->to_string();
}

std::string closure(const std::string& fraction) {
  TwoBridgeLink link = TwoBridgeLink::from_fraction(parse_fraction(fraction));
  std::string s = link.to_string();
  if (auto name = lookup_name(link)) s += " = " + name->to_string();
  return s;
}

std::string classify(const std::string& expr_text) {
  return oracle::classify_closure(parse_expr(expr_text)).to_string();
}

std::string jones_of(const std::string& expr_text) {
  using namespace tanglekit::oracle;
  Diagram d = diagram_of_closure(parse_expr(expr_text));
  Analysis a = analyze(d);
  return jones_to_string(
      jones(d, a, Orientation(std::max(a.traced, 1), false)));
}

int signature_of(const std::string& expr_text, std::optional<int> lk) {
  using namespace tanglekit::oracle;
  Diagram d = diagram_of_closure(parse_expr(expr_text));
  if (d.crossings() == 0) return 0;
  Analysis a = analyze(d);
  if (lk && a.n_comp == 2 && a.traced == 2) {
    for (int cls = 0; cls < 2; ++cls) {
      Orientation o(a.traced, false);
      if (cls == 1) o[1] = true;
      if (linking_number(d, a, o) == *lk) return signature(d, a, o);
    }
    throw py::value_error("linking number not realizable");
  }
  return signature(d, a, Orientation(std::max(a.traced, 1), false));
}

std::string band_solve(std::int64_t m, std::int64_t n, std::int64_t w,
                       std::int64_t k, std::int64_t lk) {
  auto r = solver::band_solve_coherent(m, n, w, {k, lk});
  report::json j;
  j["substrate"] = r.substrate.to_string();
  switch (r.outcome) {
    case solver::BandOutcome::Obstructed:
      j["outcome"] = "obstructed";
      break;
    case solver::BandOutcome::Unknown:
      j["outcome"] = "unknown";
      break;
    case solver::BandOutcome::Solutions: {
      j["outcome"] = "solutions";
      auto arr = report::json::array();
      for (const auto& s : r.solutions) {
        report::json sj;
        sj["case"] = s.case_id;
        sj["U"] = to_string(s.U);
        if (s.U_value) sj["U_value"] = s.U_value->to_string();
        arr.push_back(sj);
      }
      j["solutions"] = arr;
      break;
    }
  }
  return j.dump();
}

std::string xer_products(std::int64_t k, std::int64_t w) {
  auto arr = report::json::array();
  for (const auto& f : solver::solve_2k_to_2k1(k, w)) {
    report::json j;
    j["m"] = f.m;
    j["n"] = f.n;
    j["U"] = to_string(f.U);
    j["product"] = f.product.to_string();
    if (f.product_name) j["product_name"] = f.product_name->to_string();
    arr.push_back(j);
  }
  return arr.dump();
}

std::string psi_solve(std::int64_t k, const std::string& product) {
  TwoBridgeLink link = parse_link(product);
  auto sols = solver::psi_move_solve(k, link.fraction());
  auto arr = report::json::array();
  for (const auto& s : sols) arr.push_back(s.U_psi.to_string());
  return arr.dump();
}

std::string pathway(std::int64_t k) {
  auto arr = report::json::array();
  for (const auto& s : solver::pathway_check(k)) {
    report::json j;
    j["from"] = s.from;
    j["to"] = s.to;
    if (s.solved_here)
      j["solution"] = s.solution;
    else
      j["citation"] = s.citation;
    arr.push_back(j);
  }
  return arr.dump();
}

}  // namespace

PYBIND11_MODULE(_tanglekit, m) {
  m.doc() = "rational tangle calculus, tangle-equation solvers, and a "
            "diagram-invariant oracle";
  m.attr("__version__") = report::kVersion;

  m.def("eval_expr", &eval_expr, py::arg("text"),
        "evaluate a rational tangle expression to p/q");
  m.def("cf_to_fraction", [](const std::vector<std::int64_t>& word) {
    return cf_to_fraction(word).to_string();
  });
  m.def("fraction_to_cf", [](const std::string& f) {
    return fraction_to_cf(parse_fraction(f));
  });
  m.def("closure", &closure, py::arg("fraction"),
        "Schubert classification of N(p/q)");
  m.def("classify", &classify, py::arg("expr"),
        "oracle classification of a closure");
  m.def("two_bridge_equal", [](const std::string& a, const std::string& b) {
    return parse_link(a) == parse_link(b);
  });
  m.def("jones", &jones_of, py::arg("expr"));
  m.def("signature", &signature_of, py::arg("expr"),
        py::arg("lk") = std::nullopt);
  m.def("move_equiv_zero",
        [](std::int64_t t, std::int64_t w, std::int64_t c, std::int64_t d) {
          return solver::move_equiv_zero(t, w, c, d);
        });
  m.def("move_to_zero_form", [](const std::string& p, const std::string& r) {
    auto z = solver::move_to_zero_form(
        solver::Move(parse_fraction(p), parse_fraction(r)));
    return std::make_tuple(z.t, z.w);
  });
  m.def("band_solve", &band_solve, py::arg("m"), py::arg("n"), py::arg("w"),
        py::arg("k"), py::arg("lk"));
  m.def("xer_products", &xer_products, py::arg("k"), py::arg("w") = -1);
  m.def("psi_solve", &psi_solve, py::arg("k"), py::arg("product"));
  m.def("solve_trefoil_hopf", [](std::int64_t w) {
    return solver::solve_trefoil_hopf(w).to_string();
  });
  m.def("gamma_unknot",
        [](std::int64_t m, std::int64_t n, std::int64_t p, std::int64_t q) {
          return solver::gamma_unknot_classify({m, n, p, q});
        });
  m.def("pathway", &pathway, py::arg("k"));
  m.def("crossing_number_genus1", &solver::crossing_number_genus1);
}
