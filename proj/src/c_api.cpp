#include "nbv/nbv.h"

#include <cstring>
#include <string>

#include "nbv/checks.hpp"
#include "nbv/errors.hpp"
#include "nbv/nested.hpp"

struct nbv_report {
  std::string json;
  bool passed = false;
};

namespace {

thread_local std::string g_last_error = "";

nbv_status fail(nbv_status code, const std::string& message) {
  g_last_error = message;
  return code;
}

template <typename Fn>
nbv_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const nbv::InvalidConfigError& e) {
    return fail(NBV_ERR_INVALID_CONFIG, e.what());
  } catch (const nbv::InvalidPlanError& e) {
    return fail(NBV_ERR_INVALID_CONFIG, e.what());
  } catch (const nbv::BudgetExceededError& e) {
    return fail(NBV_ERR_BUDGET, e.what());
  } catch (const nbv::PoleError& e) {
    return fail(NBV_ERR_POLE, e.what());
  } catch (const nbv::ResampleExhausted& e) {
    return fail(NBV_ERR_RESAMPLE, e.what());
  } catch (const std::exception& e) {
    return fail(NBV_ERR_INTERNAL, e.what());
  }
}

nbv::Json parse_json(const char* text) {
  if (!text) throw nbv::InvalidConfigError("null JSON input");
  nbv::Json j = nbv::Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw nbv::InvalidConfigError("malformed JSON input");
  return j;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

}  // namespace

extern "C" {

const char* nbv_version(void) { return "1.0.0"; }

const char* nbv_last_error(void) { return g_last_error.c_str(); }

nbv_status nbv_run_check_json(const char* spec_json, nbv_report** out) {
  if (!out) return fail(NBV_ERR_INVALID_CONFIG, "null output handle");
  *out = nullptr;
  return guarded([&]() {
    const nbv::CheckSpec spec = nbv::check_spec_from_json(parse_json(spec_json));
    const nbv::CheckReport report = nbv::run_check(spec);
    auto* handle = new nbv_report;
    handle->json = report.to_json().dump(2) + "\n";
    handle->passed = report.all_passed();
    *out = handle;
    return NBV_OK;
  });
}

nbv_status nbv_run_sweep_json(const char* config_json, nbv_report** out) {
  if (!out) return fail(NBV_ERR_INVALID_CONFIG, "null output handle");
  *out = nullptr;
  return guarded([&]() {
    const nbv::SweepConfig cfg = nbv::sweep_config_from_json(parse_json(config_json));
    const nbv::SweepReport report = nbv::run_sweep(cfg);
    auto* handle = new nbv_report;
    handle->json = report.to_json().dump(2) + "\n";
    handle->passed = report.all_passed();
    *out = handle;
    return NBV_OK;
  });
}

const char* nbv_report_json(const nbv_report* report) {
  return report ? report->json.c_str() : "";
}

int nbv_report_passed(const nbv_report* report) {
  return (report && report->passed) ? 1 : 0;
}

void nbv_report_free(nbv_report* report) { delete report; }

nbv_status nbv_bethe_eval_json(const char* problem_json, char** out_json) {
  if (!out_json) return fail(NBV_ERR_INVALID_CONFIG, "null output pointer");
  *out_json = nullptr;
  return guarded([&]() {
    const nbv::Json j = parse_json(problem_json);
    if (!j.is_object()) throw nbv::InvalidConfigError("problem must be a JSON object");
    const int n = j.at("n").get<int>();
    if (n < 2) throw nbv::InvalidConfigError("need n >= 2");
    nbv::Shape shape;
    shape.xi = j.at("xi").get<std::vector<int>>();
    if (static_cast<int>(shape.xi.size()) != n - 1)
      throw nbv::InvalidConfigError("xi must have n-1 entries");
    shape.validate();

    nbv::VarAssignment va;
    auto parse_rat = [](const nbv::Json& v) {
      return v.is_string() ? nbv::rat_parse(v.get<std::string>()) : nbv::Rat(v.get<long>());
    };
    va.x = parse_rat(j.at("x"));
    for (const auto& v : j.at("lambda")) va.lambda.push_back(parse_rat(v));
    if (static_cast<int>(va.lambda.size()) != n)
      throw nbv::InvalidConfigError("lambda must have n entries");
    for (const auto& block : j.at("t")) {
      std::vector<nbv::Rat> b;
      for (const auto& v : block) b.push_back(parse_rat(v));
      va.t.push_back(std::move(b));
    }
    for (int a = 1; a <= n - 1; ++a)
      if (static_cast<int>(va.t.at(static_cast<std::size_t>(a) - 1).size()) != shape.at(a))
        throw nbv::InvalidConfigError("t block sizes must match xi");

    nbv::GlWeight w;
    w.entries = va.lambda;
    nbv::EvalModule mod(w, va.x);
    const nbv::SubBethe top = nbv::top_problem(n, shape, va);

    const std::string formula = j.value("formula", std::string("direct"));
    nbv::ModuleVector result;
    nbv::NestedOptions opt;
    if (formula == "direct") {
      result = nbv::bethe_direct(mod, shape, va);
    } else {
      const int m = j.at("m").get<int>();
      if (m < 1 || m >= n) throw nbv::InvalidConfigError("m must satisfy 1 <= m < n");
      if (formula == "splitting")
        result = nbv::splitting_rhs(mod, top, m, nbv::ModuleVector::vacuum());
      else if (formula == "uprop")
        result = nbv::intermediate_rhs(mod, top, m, nbv::ModuleVector::vacuum(), opt);
      else if (formula == "mainth")
        result = nbv::main_formula_rhs(mod, top, m, nbv::ModuleVector::vacuum(), opt);
      else
        throw nbv::InvalidConfigError("unknown formula '" + formula + "'");
    }

    nbv::Json terms = nbv::Json::object();
    for (const auto& [mono, coeff] : result.terms) terms[mono.str()] = nbv::rat_str(coeff);
    nbv::Json out;
    out["terms"] = terms;
    *out_json = dup_string(out.dump(2) + "\n");
    return NBV_OK;
  });
}

void nbv_string_free(char* s) { delete[] s; }

}  // extern "C"
