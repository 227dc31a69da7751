#include "chordal_cli/cli.hpp"

#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>
#include <json.hpp>

#include "chordal/betti.hpp"
#include "chordal/determinantal.hpp"
#include "chordal/error.hpp"
#include "chordal/genus2.hpp"
#include "chordal/groebner.hpp"
#include "chordal/hilbert.hpp"
#include "chordal/io.hpp"
#include "chordal/predict.hpp"
#include "chordal/secant.hpp"

namespace chordal {

namespace {

using nlohmann::ordered_json;

struct Common {
  std::uint32_t field = kDefaultPrime;  // 0 selects the rationals
  std::uint64_t seed = 1;
  int max_deg = 12;   // basis degree cap
  int max_row = -1;   // betti row window
  std::string format = "text";
  std::string out_path;
};

void add_common(CLI::App* cmd, Common& c, bool with_field = true) {
  cmd->fallthrough();
  if (with_field)
    cmd->add_option("--field", c.field, "coefficient field: a prime, or 0 for the rationals");
  cmd->add_option("--seed", c.seed, "seed for all randomized choices");
  cmd->add_option("--format", c.format, "output format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", c.out_path, "write output to this file instead of stdout");
}

bool want_json(const Common& c) { return c.format == "json"; }

void emit(const Common& c, std::ostream& out, const std::string& payload) {
  if (c.out_path.empty()) {
    out << payload;
    return;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) throw InvalidArgument("cannot open output file: " + c.out_path);
  f << payload;
}

template <class Fn>
int with_field(std::uint32_t p, Fn&& fn) {
  if (p == 0) {
    RationalField f;
    return fn(f);
  }
  FieldSpec spec{p};
  spec.validate();
  PrimeField f(p);
  return fn(f);
}

// ===== serializers =====

template <class F>
ordered_json ideal_json(const Ideal<F>& ideal) {
  ordered_json j;
  j["characteristic"] = ideal.ring->field.characteristic();
  j["variables"] = ideal.ring->names;
  std::vector<std::string> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) gens.push_back(print_polynomial(g));
  j["generators"] = gens;
  return j;
}

template <class F>
std::string ideal_payload(const Common& c, const Ideal<F>& ideal) {
  if (want_json(c)) return ideal_json(ideal).dump(2) + "\n";
  std::ostringstream os;
  write_ideal(os, ideal);
  return os.str();
}

ordered_json betti_json(const BettiTable& t) {
  ordered_json j;
  j["pd"] = t.pd;
  j["reg"] = t.reg;
  j["codim"] = t.codim;
  j["degree"] = t.degree;
  j["complete"] = t.complete;
  ordered_json entries = ordered_json::array();
  for (const auto& [ij, b] : t.entries) entries.push_back({ij.first, ij.second, b});
  j["entries"] = std::move(entries);
  return j;
}

ordered_json hilbert_json(const HilbertData& h) {
  ordered_json j;
  j["dimension_affine"] = h.dim_affine;
  j["dimension_projective"] = h.dim_affine - 1;
  j["degree"] = h.degree;
  j["numerator"] = h.numerator;
  j["alpha"] = h.alpha;
  ordered_json vals = ordered_json::array();
  for (const auto& [m, v] : h.values) vals.push_back({m, v});
  j["values"] = std::move(vals);
  return j;
}

std::string hilbert_text(const HilbertData& h) {
  std::ostringstream os;
  os << "affine dimension: " << h.dim_affine << "\n";
  os << "projective dimension of the variety: " << h.dim_affine - 1 << "\n";
  os << "degree: " << h.degree << "\n";
  os << "numerator:";
  for (long long c : h.numerator) os << " " << c;
  os << "\n";
  os << "polynomial coefficients (binomial basis):";
  for (long long a : h.alpha) os << " " << a;
  os << "\n";
  os << "values:";
  for (const auto& [m, v] : h.values) os << " " << m << ":" << v;
  os << "\n";
  return os.str();
}

ordered_json cycle_json(const CycleCertificate& c) {
  ordered_json j;
  j["rows"] = c.s + 1;
  j["cols"] = c.t + 1;
  j["k"] = c.k;
  j["position"] = {c.position_i, c.position_j};
  j["hypotheses_ok"] = c.hypotheses_ok;
  j["frame_found"] = c.frame_found;
  j["frame"] = {c.frame_row, c.frame_col};
  j["repositioned"] = c.repositioned;
  j["boundary_nonzero"] = c.boundary_nonzero;
  j["coefficients_in_ideal"] = c.coefficients_in_ideal;
  j["coefficients_are_minors"] = c.coefficients_are_minors;
  j["betti_value"] = c.betti_value;
  j["cycle_ok"] = c.cycle_ok();
  j["ok"] = c.ok();
  return j;
}

ordered_json report_json(const PredictionReport& r) {
  ordered_json j;
  j["genus"] = r.params.g;
  j["degree"] = r.params.d;
  j["secant_index"] = r.params.k;
  j["ambient"] = r.params.n();
  ordered_json rows = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json q;
    q["name"] = row.name;
    q["kind"] = row.kind == RowKind::Theorem
                    ? "theorem"
                    : (row.kind == RowKind::Conjecture ? "conjecture" : "informational");
    q["expected"] = row.expected;
    if (row.checked) {
      q["computed"] = row.actual;
      q["match"] = row.match;
    }
    if (!row.note.empty()) q["note"] = row.note;
    rows.push_back(std::move(q));
  }
  j["rows"] = std::move(rows);
  j["ok"] = r.ok();
  return j;
}

template <class F>
ordered_json secant_json(const SecantResult<F>& r) {
  ordered_json j = ideal_json(r.ideal);
  j["k"] = r.k;
  j["max_degree"] = r.max_degree;
  auto as_pairs = [](const std::map<int, long long>& m) {
    ordered_json a = ordered_json::array();
    for (const auto& [d, v] : m) a.push_back({d, v});
    return a;
  };
  j["piece_dims"] = as_pairs(r.piece_dims);
  j["new_generators"] = as_pairs(r.new_generators);
  j["quotient_dims"] = as_pairs(r.quotient_dims);
  return j;
}

template <class F>
std::string secant_text(const SecantResult<F>& r) {
  std::ostringstream os;
  os << "# secant index " << r.k << ", pieces through degree " << r.max_degree << "\n";
  os << "# piece dimensions:";
  for (const auto& [d, v] : r.piece_dims) os << " " << d << ":" << v;
  os << "\n# new generators:";
  for (const auto& [d, v] : r.new_generators) os << " " << d << ":" << v;
  os << "\n# join quotient hilbert values:";
  for (const auto& [d, v] : r.quotient_dims) os << " " << d << ":" << v;
  os << "\n";
  write_ideal(os, r.ideal);
  return os.str();
}

// ===== command bodies =====

template <class F>
LinearFormMatrix<F> to_linear(const PolyMatrix<F>& pm) {
  return make_linear_matrix(pm.ring, pm.rows, pm.cols, pm.entries);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact secant-variety and syzygy toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  Common c;
  std::function<int()> action;

  // ----- ideal gen -----
  auto* ideal_cmd = app.add_subcommand("ideal", "construct named ideals");
  ideal_cmd->fallthrough();
  ideal_cmd->require_subcommand(1);
  auto* gen = ideal_cmd->add_subcommand("gen", "generators of a named family");
  gen->fallthrough();
  gen->require_subcommand(1);

  {
    auto* rnc = gen->add_subcommand("rnc", "rational normal curve of the given degree");
    auto deg = std::make_shared<int>(3);
    rnc->add_option("--deg", *deg, "degree of the curve")->required();
    add_common(rnc, c);
    rnc->callback([&, deg] {
      action = [&, deg] {
        return with_field(c.field, [&](auto& f) {
          emit(c, out, ideal_payload(c, rnc_ideal(f, *deg)));
          return 0;
        });
      };
    });
  }
  {
    auto* hk = gen->add_subcommand("hankel", "minor ideal of a generic hankel matrix");
    auto deg = std::make_shared<int>(4);
    auto rows = std::make_shared<int>(2);
    auto size = std::make_shared<int>(0);
    hk->add_option("--deg", *deg, "hankel parameter: variables x_0..x_deg")->required();
    hk->add_option("--rows", *rows, "number of rows")->required();
    hk->add_option("--size", *size, "minor size (default: number of rows)");
    add_common(hk, c);
    hk->callback([&, deg, rows, size] {
      action = [&, deg, rows, size] {
        return with_field(c.field, [&](auto& f) {
          auto m = hankel_matrix(f, *deg, *rows);
          emit(c, out, ideal_payload(c, minor_ideal(m, *size > 0 ? *size : *rows)));
          return 0;
        });
      };
    });
  }
  auto genus2_body = [&](bool diagnostics) {
    Genus2Options o;
    o.p = c.field;
    o.seed = c.seed;
    Genus2Fixture fx = genus2_fixture(o);
    if (want_json(c)) {
      ordered_json j = ideal_json(fx.curve);
      j["attempts"] = fx.attempts;
      j["system_dim"] = fx.system_dim;
      j["kernel_dims"] = fx.kernel_dims;
      j["span_consistent"] = fx.span_consistent;
      emit(c, out, j.dump(2) + "\n");
    } else {
      std::ostringstream os;
      if (diagnostics) {
        os << "# genus-2 degree-9 curve in P^7, p = " << fx.p << ", seed = " << fx.seed
           << "\n";
        os << "# attempts: " << fx.attempts << ", plane system dimension: " << fx.system_dim
           << "\n";
        os << "# ideal pieces in degrees 2..4:";
        for (long long v : fx.kernel_dims) os << " " << v;
        os << "\n# quadrics generate through degree 4: "
           << (fx.span_consistent ? "yes" : "no") << "\n";
      }
      write_ideal(os, fx.curve);
      emit(c, out, os.str());
    }
    return 0;
  };
  {
    auto* g2 = gen->add_subcommand("genus2", "genus-2 degree-9 curve in P^7");
    add_common(g2, c);
    g2->callback([&] {
      action = [&] { return genus2_body(false); };
    });
  }
  {
    auto* fixture = app.add_subcommand("fixture", "reference inputs with diagnostics");
    fixture->fallthrough();
    fixture->require_subcommand(1);
    auto* g2 = fixture->add_subcommand("genus2", "genus-2 curve fixture with diagnostics");
    add_common(g2, c);
    g2->callback([&] {
      action = [&] { return genus2_body(true); };
    });
  }

  // ----- gb -----
  {
    auto* gb = app.add_subcommand("gb", "reduced groebner basis of an ideal file");
    auto in = std::make_shared<std::string>();
    gb->add_option("--in", *in, "ideal file")->required();
    gb->add_option("--max-deg", c.max_deg, "s-polynomial degree cap");
    add_common(gb, c, false);
    gb->callback([&, in] {
      action = [&, in] {
        IdealVariant v = read_ideal_file(*in);
        return std::visit(
            [&](auto& ideal) {
              BuchbergerOptions o;
              o.degree_cap = c.max_deg;
              auto basis = buchberger(ideal, o);
              Ideal<typename std::decay_t<decltype(ideal)>::Field> res{basis.ring,
                                                                       basis.elems};
              emit(c, out, ideal_payload(c, res));
              return 0;
            },
            v);
      };
    });
  }

  // ----- hilbert -----
  {
    auto* hb = app.add_subcommand("hilbert", "hilbert series data of an ideal file");
    auto in = std::make_shared<std::string>();
    auto upto = std::make_shared<int>(-1);
    hb->add_option("--in", *in, "ideal file")->required();
    hb->add_option("--upto", *upto, "record values through this degree");
    hb->add_option("--max-deg", c.max_deg, "s-polynomial degree cap");
    add_common(hb, c, false);
    hb->callback([&, in, upto] {
      action = [&, in, upto] {
        IdealVariant v = read_ideal_file(*in);
        return std::visit(
            [&](auto& ideal) {
              BuchbergerOptions o;
              o.degree_cap = c.max_deg;
              HilbertData h = hilbert_data(buchberger(ideal, o), *upto);
              emit(c, out,
                   want_json(c) ? hilbert_json(h).dump(2) + "\n" : hilbert_text(h));
              return 0;
            },
            v);
      };
    });
  }

  // ----- betti -----
  {
    auto* bt = app.add_subcommand("betti", "graded betti table of an ideal file");
    auto in = std::make_shared<std::string>();
    bt->add_option("--in", *in, "ideal file")->required();
    bt->add_option("--max-deg", c.max_deg, "s-polynomial degree cap");
    bt->add_option("--max-row", c.max_row, "row window when the table may be unbounded");
    add_common(bt, c, false);
    bt->callback([&, in] {
      action = [&, in] {
        IdealVariant v = read_ideal_file(*in);
        return std::visit(
            [&](auto& ideal) {
              BettiOptions o;
              o.seed = c.seed;
              o.max_row = c.max_row;
              o.gb.degree_cap = c.max_deg;
              BettiTable t = betti_table(ideal, o);
              emit(c, out,
                   want_json(c) ? betti_json(t).dump(2) + "\n" : render_betti_text(t));
              return 0;
            },
            v);
      };
    });
  }

  // ----- secant -----
  {
    auto* sc = app.add_subcommand("secant", "secant ideal of the variety of an ideal file");
    auto in = std::make_shared<std::string>();
    auto k = std::make_shared<int>(1);
    auto maxd = std::make_shared<int>(-1);
    sc->add_option("--in", *in, "ideal file")->required();
    sc->add_option("--k", *k, "secant index: k = 1 joins two copies");
    sc->add_option("--max-deg", *maxd, "compute ideal pieces through this degree");
    add_common(sc, c, false);
    sc->callback([&, in, k, maxd] {
      action = [&, in, k, maxd] {
        IdealVariant v = read_ideal_file(*in);
        return std::visit(
            [&](auto& ideal) {
              SecantOptions o;
              o.max_degree = *maxd;
              auto r = secant_ideal(ideal, *k, o);
              emit(c, out, want_json(c) ? secant_json(r).dump(2) + "\n" : secant_text(r));
              return 0;
            },
            v);
      };
    });
  }

  // ----- en -----
  {
    auto* en = app.add_subcommand("en", "eagon-northcott betti table for a 1-generic matrix");
    auto rows = std::make_shared<int>(2);
    auto cols = std::make_shared<int>(3);
    en->add_option("--rows", *rows, "matrix rows")->required();
    en->add_option("--cols", *cols, "matrix columns")->required();
    add_common(en, c, false);
    en->callback([&, rows, cols] {
      action = [&, rows, cols] {
        BettiTable t = en_betti(*rows, *cols);
        emit(c, out, want_json(c) ? betti_json(t).dump(2) + "\n" : render_betti_text(t));
        return 0;
      };
    });
  }

  // ----- cycle -----
  {
    auto* cy = app.add_subcommand("cycle", "koszul cycle certificate for a minor ideal");
    auto in = std::make_shared<std::string>();
    auto deg = std::make_shared<int>(0);
    auto rows = std::make_shared<int>(3);
    auto k = std::make_shared<int>(1);
    auto skip_betti = std::make_shared<bool>(false);
    cy->add_option("--in", *in, "matrix file of linear forms");
    cy->add_option("--deg", *deg, "use the generic hankel matrix of this degree instead");
    cy->add_option("--rows", *rows, "hankel rows (with --deg)");
    cy->add_option("--k", *k, "cycle parameter: certifies the (k+2)-minor ideal");
    cy->add_flag("--skip-betti", *skip_betti, "skip the betti table cross-check");
    cy->add_option("--max-deg", c.max_deg, "s-polynomial degree cap");
    add_common(cy, c);
    cy->callback([&, in, deg, rows, k, skip_betti] {
      action = [&, in, deg, rows, k, skip_betti] {
        CycleOptions o;
        o.seed = c.seed;
        o.compute_betti = !*skip_betti;
        o.gb.degree_cap = c.max_deg;
        CycleCertificate cert;
        if (!in->empty()) {
          MatrixVariant v = read_matrix_file(*in);
          cert = std::visit([&](auto& pm) { return verify_cycle(to_linear(pm), *k, o); }, v);
        } else if (*deg > 0) {
          if (c.field == 0) {
            RationalField f;
            cert = verify_cycle(hankel_matrix(f, *deg, *rows), *k, o);
          } else {
            FieldSpec spec{c.field};
            spec.validate();
            PrimeField f(c.field);
            cert = verify_cycle(hankel_matrix(f, *deg, *rows), *k, o);
          }
        } else {
          throw InvalidArgument("cycle needs either --in or --deg");
        }
        emit(c, out, want_json(c) ? cycle_json(cert).dump(2) + "\n" : render_cycle_text(cert));
        return (*skip_betti ? cert.cycle_ok() : cert.ok()) ? 0 : 1;
      };
    });
  }

  // ----- verify -----
  {
    auto* vf = app.add_subcommand("verify", "check closed-form predictions");
    auto g = std::make_shared<int>(2);
    auto d = std::make_shared<int>(9);
    auto k = std::make_shared<int>(1);
    auto fixture = std::make_shared<bool>(false);
    vf->add_option("--genus", *g, "curve genus")->required();
    vf->add_option("--deg", *d, "embedding degree")->required();
    vf->add_option("--k", *k, "secant index");
    vf->add_flag("--fixture", *fixture,
                 "build the genus-2 fixture and verify against computed data");
    vf->add_option("--max-deg", c.max_deg, "s-polynomial degree cap");
    add_common(vf, c);
    vf->callback([&, g, d, k, fixture] {
      action = [&, g, d, k, fixture] {
        CurveParams params{*g, *d, *k};
        params.validate();
        PredictionReport rep;
        if (*fixture) {
          if (*g != 2 || *d != 9 || *k != 1)
            throw InvalidArgument(
                "fixture verification supports genus 2, degree 9, k = 1");
          if (c.field == 0) throw InvalidArgument("the fixture needs a finite prime field");
          Genus2Options go;
          go.p = c.field;
          go.seed = c.seed;
          Genus2Fixture fx = genus2_fixture(go);
          SecantOptions so;
          so.gb.degree_cap = c.max_deg;
          auto sec = secant_ideal(fx.curve, 1, so);
          BuchbergerOptions bo;
          bo.degree_cap = c.max_deg;
          HilbertData hd = hilbert_data(buchberger(sec.ideal, bo), 4);
          BettiOptions betio;
          betio.seed = c.seed;
          betio.gb.degree_cap = c.max_deg;
          BettiTable bt = betti_table(sec.ideal, betio);
          rep = verify_all(params, bt, hd);
        } else {
          rep = predictor_report(params);
        }
        emit(c, out,
             want_json(c) ? report_json(rep).dump(2) + "\n" : render_report_text(rep));
        return rep.ok() ? 0 : 1;
      };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    return action ? action() : 2;
  } catch (const ResourceLimit& e) {
    err << "resource limit: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace chordal
