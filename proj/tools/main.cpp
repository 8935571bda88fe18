#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>

#include "wittlab/json_io.hpp"
#include "wittlab/suites.hpp"

using namespace wittlab;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte carries the offset of the failure
    throw RingError(std::string("JSON parse error: ") + e.what());
  }
}

void emit(const Json& j) { std::cout << j.dump() << "\n"; }

struct SymbolArgs {
  std::string a, b, x, y;
  int precision_slack = -1;
  std::int64_t p = 0;  // optional declared parameters, validated against the JSON
  int f = 0, n = 0, m = 0;
};

void validate_declared(const SymbolArgs& args, const Ring& ring, int n, int m = 0) {
  if (args.p && args.p != ring->p) throw RingError("--p disagrees with the input ring");
  if (args.f && args.f != ring->f) throw RingError("--f disagrees with the input ring");
  if (args.n && args.n != n) throw RingError("--n disagrees with the input level");
  if (args.m && m && args.m != m) throw RingError("--m disagrees with the input level");
}

PrecisionPolicy policy_of(int slack) {
  PrecisionPolicy p;
  p.initial_slack = slack;
  return p;
}

Json provenance(const SymbolValue& s, const Ring& K, int slack) {
  Json j;
  j["p"] = s.p;
  j["f"] = K->f;
  j["n"] = s.n;
  j["algorithm"] = "ghost-residue";
  j["precision_slack"] = slack < 0 ? s.n : slack;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Witt vector arithmetic, Artin-Schreier-Witt symbols and"
               " differential-form pairings over local fields"};
  app.require_subcommand(1);

  // ---- witt -----------------------------------------------------------
  auto* witt = app.add_subcommand("witt", "truncated Witt vector calculator");
  witt->require_subcommand(1);
  std::string wa, wb, wc;
  int wk = 1, wm = -1, wn = 1;

  auto* w_add = witt->add_subcommand("add", "a + b");
  w_add->add_option("--a", wa)->required();
  w_add->add_option("--b", wb)->required();
  auto* w_mul = witt->add_subcommand("mul", "a * b");
  w_mul->add_option("--a", wa)->required();
  w_mul->add_option("--b", wb)->required();
  auto* w_neg = witt->add_subcommand("neg", "-a");
  w_neg->add_option("--a", wa)->required();
  auto* w_frob = witt->add_subcommand("frob", "F^k a");
  w_frob->add_option("--a", wa)->required();
  w_frob->add_option("--k", wk, "Frobenius power (default 1)");
  auto* w_versch = witt->add_subcommand("versch", "Va (extending by default)");
  w_versch->add_option("--a", wa)->required();
  w_versch->add_option("--m", wm, "target length: n+1 extends, n is the truncated shift");
  auto* w_teich = witt->add_subcommand("teich", "[c] at length n");
  std::int64_t wp = 0;
  w_teich->add_option("--c", wc)->required();
  w_teich->add_option("--n", wn)->required();
  w_teich->add_option("--p", wp, "prime, required for torsion-free coefficient rings");
  auto* w_ghost = witt->add_subcommand("ghost", "ghost components over a torsion-free ring");
  w_ghost->add_option("--a", wa)->required();
  auto* w_dec = witt->add_subcommand("decompose", "a = sum V^i [x_i]");
  w_dec->add_option("--a", wa)->required();

  // ---- symbol ---------------------------------------------------------
  auto* symbol = app.add_subcommand("symbol", "Artin-Schreier-Witt symbol over F_q((t))");
  symbol->require_subcommand(1);
  SymbolArgs sargs;
  auto* s_asw = symbol->add_subcommand("asw", "[a, b) at the level of a");
  s_asw->add_option("--a", sargs.a, "Witt vector JSON over a laurent-poly ring")->required();
  s_asw->add_option("--b", sargs.b, "element JSON, nonzero")->required();
  s_asw->add_option("--p", sargs.p, "declared p, validated against the JSON");
  s_asw->add_option("--f", sargs.f, "declared f, validated against the JSON");
  s_asw->add_option("--n", sargs.n, "declared level, validated against the JSON");
  s_asw->add_option("--precision-slack", sargs.precision_slack);
  auto* s_inf = symbol->add_subcommand("asw-inf", "[x, b) for a covector x");
  s_inf->add_option("--x", sargs.x, "covector JSON")->required();
  s_inf->add_option("--b", sargs.b)->required();
  s_inf->add_option("--precision-slack", sargs.precision_slack);

  // ---- pairing --------------------------------------------------------
  auto* pairing = app.add_subcommand("pairing", "the derived pairings ((.,.))");
  pairing->require_subcommand(1);
  auto* p_n = pairing->add_subcommand("n", "((a,b)) at one level");
  p_n->add_option("--a", sargs.a)->required();
  p_n->add_option("--b", sargs.b)->required();
  p_n->add_option("--p", sargs.p);
  p_n->add_option("--f", sargs.f);
  p_n->add_option("--n", sargs.n);
  p_n->add_option("--precision-slack", sargs.precision_slack);
  auto* p_mn = pairing->add_subcommand("mn", "((a,b)) for mixed levels m, n");
  p_mn->add_option("--a", sargs.a)->required();
  p_mn->add_option("--b", sargs.b)->required();
  p_mn->add_option("--p", sargs.p);
  p_mn->add_option("--f", sargs.f);
  p_mn->add_option("--m", sargs.m, "declared level of a");
  p_mn->add_option("--n", sargs.n, "declared level of b");
  p_mn->add_option("--precision-slack", sargs.precision_slack);
  auto* p_inf = pairing->add_subcommand("inf", "((x,y)) for covectors");
  p_inf->add_option("--x", sargs.x)->required();
  p_inf->add_option("--y", sargs.y)->required();
  p_inf->add_option("--precision-slack", sargs.precision_slack);

  // ---- forms ----------------------------------------------------------
  auto* forms = app.add_subcommand("forms", "formal tensors and the alpha evaluation map");
  forms->require_subcommand(1);
  std::string tensor_text, relation_name;
  std::int64_t fp = 2;
  int ff = 1, fn = 2, fsamples = 100;
  std::uint64_t fseed = 1;
  auto* f_eval = forms->add_subcommand("eval", "alpha of a tensor");
  f_eval->add_option("--tensor", tensor_text)->required();
  f_eval->add_option("--n", sargs.n, "declared level, validated against the JSON");
  f_eval->add_option("--precision-slack", sargs.precision_slack);
  auto* f_check = forms->add_subcommand("check", "sample relation generators, check alpha = 0");
  f_check->add_option("--relation", relation_name, "M_n'|M_n|N_n'|N_n|N_cov|Nprime_cov")
      ->required();
  f_check->add_option("--p", fp);
  f_check->add_option("--f", ff);
  f_check->add_option("--n", fn);
  f_check->add_option("--samples", fsamples);
  f_check->add_option("--seed", fseed);

  // ---- suite ----------------------------------------------------------
  auto* suite = app.add_subcommand("suite", "seeded property suites");
  suite->require_subcommand(1);
  bool as_json = false;
  auto* su_list = suite->add_subcommand("list", "list the catalog");
  su_list->add_flag("--json", as_json);
  auto* su_run = suite->add_subcommand("run", "run one suite");
  std::string suite_name;
  SuiteSpec cli_spec;
  bool field_witnesses = false;
  su_run->add_option("--name", suite_name)->required();
  auto* op = su_run->add_option("--p", cli_spec.p);
  auto* of = su_run->add_option("--f", cli_spec.f);
  auto* on = su_run->add_option("--n", cli_spec.n);
  auto* om = su_run->add_option("--m", cli_spec.m);
  auto* osamples = su_run->add_option("--samples", cli_spec.samples);
  auto* oseed = su_run->add_option("--seed", cli_spec.seed);
  auto* oslack = su_run->add_option("--precision-slack", cli_spec.precision_slack);
  auto* ofield = su_run->add_flag("--field-witnesses", field_witnesses,
                                  "witt-core suites over F_q instead of F_q((t))");
  su_run->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);

    if (w_add->parsed())
      emit(witt_to_json(witt_add(witt_from_json(parse_json(wa)), witt_from_json(parse_json(wb)))));
    else if (w_mul->parsed())
      emit(witt_to_json(witt_mul(witt_from_json(parse_json(wa)), witt_from_json(parse_json(wb)))));
    else if (w_neg->parsed())
      emit(witt_to_json(witt_neg(witt_from_json(parse_json(wa)))));
    else if (w_frob->parsed()) {
      WittVector a = witt_from_json(parse_json(wa));
      if (a.ring->is_char_p())
        emit(witt_to_json(witt_frobenius_k(a, wk)));
      else {
        for (int i = 0; i < wk; ++i) a = frobenius_W(a);
        emit(witt_to_json(a));
      }
    } else if (w_versch->parsed()) {
      WittVector a = witt_from_json(parse_json(wa));
      emit(witt_to_json(verschiebung(a, wm < 0 ? a.n() + 1 : wm)));
    } else if (w_teich->parsed())
      emit(witt_to_json(teichmuller(elem_from_json(parse_json(wc)), wn, wp)));
    else if (w_ghost->parsed())
      emit(ghost_to_json(ghost(witt_from_json(parse_json(wa)))));
    else if (w_dec->parsed()) {
      Json out = Json::array();
      for (const Elem& c : teich_decompose(witt_from_json(parse_json(wa))))
        out.push_back(elem_to_json(c));
      emit(out);
    }

    else if (s_asw->parsed()) {
      WittVector a = witt_from_json(parse_json(sargs.a));
      Elem b = elem_from_json(parse_json(sargs.b));
      validate_declared(sargs, a.ring, a.n());
      SymbolValue s = asw_symbol(a, b, policy_of(sargs.precision_slack));
      emit(symbol_to_json(s, provenance(s, a.ring, sargs.precision_slack)));
    } else if (s_inf->parsed()) {
      Covector x = covector_from_json(parse_json(sargs.x));
      Elem b = elem_from_json(parse_json(sargs.b));
      SymbolValue s = asw_symbol_inf(x, b, policy_of(sargs.precision_slack));
      emit(symbol_to_json(s, provenance(s, x.ring, sargs.precision_slack)));
    }

    else if (p_n->parsed() || p_mn->parsed()) {
      WittVector a = witt_from_json(parse_json(sargs.a));
      WittVector b = witt_from_json(parse_json(sargs.b));
      if (p_n->parsed())
        validate_declared(sargs, a.ring, a.n());
      else {
        SymbolArgs swapped = sargs;
        swapped.n = sargs.n;
        swapped.m = 0;
        validate_declared(swapped, b.ring, b.n(), 0);
        if (sargs.m && sargs.m != a.n()) throw RingError("--m disagrees with the level of a");
      }
      SymbolValue s = p_n->parsed() ? pairing_n(a, b, policy_of(sargs.precision_slack))
                                    : pairing_mn(a, b, policy_of(sargs.precision_slack));
      emit(symbol_to_json(s, provenance(s, a.ring, sargs.precision_slack)));
    } else if (p_inf->parsed()) {
      Covector x = covector_from_json(parse_json(sargs.x));
      Covector y = covector_from_json(parse_json(sargs.y));
      SymbolValue s = pairing_inf(x, y, policy_of(sargs.precision_slack));
      emit(symbol_to_json(s, provenance(s, x.ring, sargs.precision_slack)));
    }

    else if (f_eval->parsed()) {
      FormalTensor t = tensor_from_json(parse_json(tensor_text));
      if (sargs.n && sargs.n != t.n) throw RingError("--n disagrees with the tensor level");
      SymbolValue s = alpha_eval(t, policy_of(sargs.precision_slack));
      emit(symbol_to_json(s, provenance(s, t.ring, sargs.precision_slack)));
    } else if (f_check->parsed()) {
      RelationKind kind = relation_kind_from_name(relation_name);
      Ring K = make_laurent(fp, ff);
      check_budget(fp, fn);
      int failures = 0;
      Json fails = Json::array();
      for (int i = 0; i < fsamples; ++i) {
        Rng rng = Rng::for_sample(fseed, static_cast<std::uint64_t>(i));
        SymbolValue s;
        if (relation_is_covector(kind))
          s = alpha_eval_cov(gen_cov_relation(kind, rng, K, fn));
        else
          s = alpha_eval(gen_relation(kind, rng, K, fn));
        if (!s.is_zero()) {
          ++failures;
          Json one;
          one["sample"] = i;
          one["value"] = s.v;
          one["modulus"] = s.modulus();
          fails.push_back(one);
        }
      }
      Json out;
      out["relation"] = relation_kind_name(kind);
      out["samples"] = fsamples;
      out["failures"] = fails;
      out["status"] = failures == 0 ? "pass" : "fail";
      emit(out);
      return failures == 0 ? kExitPass : kExitViolation;
    }

    else if (su_list->parsed()) {
      if (as_json) {
        Json out = Json::array();
        for (const auto& def : suite_catalog()) {
          Json one;
          one["id"] = def.id;
          one["description"] = def.description;
          one["defaults"] = {{"p", def.defaults.p},       {"f", def.defaults.f},
                             {"n", def.defaults.n},       {"m", def.defaults.m},
                             {"samples", def.defaults.samples}};
          out.push_back(one);
        }
        emit(out);
      } else {
        for (const auto& def : suite_catalog())
          std::printf("%-28s %s\n", def.id.c_str(), def.description.c_str());
      }
    } else if (su_run->parsed()) {
      const SuiteDef* def = find_suite(suite_name);
      if (!def) throw RingError("unknown suite: " + suite_name);
      SuiteSpec spec = def->defaults;
      spec.id = suite_name;
      if (op->count()) spec.p = cli_spec.p;
      if (of->count()) spec.f = cli_spec.f;
      if (on->count()) spec.n = cli_spec.n;
      if (om->count()) spec.m = cli_spec.m;
      else if (on->count()) spec.m = cli_spec.n + (def->defaults.m > def->defaults.n ? 1 : 0);
      if (osamples->count()) spec.samples = cli_spec.samples;
      if (oseed->count()) spec.seed = cli_spec.seed;
      if (oslack->count()) spec.precision_slack = cli_spec.precision_slack;
      if (ofield->count()) spec.laurent = !field_witnesses;
      SuiteReport rep = run_suite(spec);
      if (as_json)
        emit(rep.to_json());
      else {
        std::printf("%s: %s (%d samples, %zu failures, %.1f ms)\n", rep.id.c_str(),
                    rep.passed() ? "pass" : "FAIL", rep.samples, rep.failures.size(),
                    rep.wall_ms);
        for (const auto& f : rep.failures)
          std::printf("  sample %d: %s\n", f.sample, f.witness.dump().c_str());
      }
      return rep.passed() ? kExitPass : kExitViolation;
    }

    return kExitPass;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return kExitPass;  // --help
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const IntegralityError& e) {
    std::cerr << "precision error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
