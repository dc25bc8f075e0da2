#include "rothlab/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "rothlab/errors.hpp"

namespace rothlab {

namespace {

std::string fmt_double(double v) {
  if (!std::isfinite(v)) throw consistency_error("report contains a non-finite value");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class JsonWriter {
 public:
  void field(const char* key, double v) { emit(key, fmt_double(v)); }
  void field(const char* key, std::uint64_t v) { emit(key, std::to_string(v)); }
  void field(const char* key, const std::string& v) { emit(key, "\"" + v + "\""); }

  void timings(const char* key, const std::vector<StageTiming>& ts) {
    std::string body = "[";
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i) body += ",";
      body += "{\"stage\":\"" + ts[i].stage + "\",\"ms\":" + fmt_double(ts[i].ms) + "}";
    }
    body += "]";
    emit(key, body);
  }

  std::string str() const { return "{" + body_ + "}"; }

 private:
  void emit(const char* key, const std::string& value) {
    if (!body_.empty()) body_ += ",";
    body_ += std::string("\"") + key + "\":" + value;
  }

  std::string body_;
};

}  // namespace

std::string report_to_json(const PipelineReport& r) {
  JsonWriter w;
  w.field("N", r.N);
  w.field("z", r.z);
  w.field("M", r.M);
  w.field("Nprime", r.Nprime);
  w.field("b", r.b);
  w.field("A_size", r.A_size);
  w.field("alpha_measured", r.alpha_measured);
  w.field("A0_size", r.A0_size);
  w.field("a_l1", r.a_l1);
  w.field("moment_p53", r.moment_p53);
  w.field("moment_p52", r.moment_p52);
  w.field("moment_p103", r.moment_p103);
  w.field("delta", r.delta);
  w.field("epsilon", r.epsilon);
  w.field("spectrum_size", r.spectrum_size);
  w.field("spectrum_bound", r.spectrum_bound);
  w.field("spectrum_certificate", r.spectrum_certificate);
  w.field("bohr_size", r.bohr_size);
  w.field("pigeonhole_bound", r.pigeonhole_bound);
  w.field("pigeonhole_verdict", r.pigeonhole_verdict);
  w.field("bohr_condition_rhs", r.bohr_condition_rhs);
  w.field("bohr_condition", r.bohr_condition);
  w.field("kernel_deviation_value", r.kernel_deviation_value);
  w.field("kernel_deviation_cap", r.kernel_deviation_cap);
  w.field("kernel_deviation_verdict", r.kernel_deviation_verdict);
  w.field("a1_l1", r.a1_l1);
  w.field("l1_preservation", r.l1_preservation);
  w.field("delta_direct", r.delta_direct);
  w.field("delta_fourier", r.delta_fourier);
  w.field("delta_ratio", r.delta_ratio);
  w.field("delta_consistency", r.delta_consistency);
  w.field("holder_lhs", r.holder_lhs);
  w.field("holder_rhs", r.holder_rhs);
  w.field("holder_verdict", r.holder_verdict);
  w.field("majorant_domination", r.majorant_domination);
  w.field("a1_l2sq_times_Nprime", r.a1_l2sq_times_Nprime);
  w.field("l2_lhs", r.l2_lhs);
  w.field("l2_mid", r.l2_mid);
  w.field("l2_rhs", r.l2_rhs);
  w.field("l2_rhs_sq_times_Nprime", r.l2_rhs_sq_times_Nprime);
  w.field("l2_chain", r.l2_chain);
  w.field("pair_ratio_max", r.pair_ratio_max);
  w.field("pair_ratio_diagonal", r.pair_ratio_diagonal);
  w.field("pair_samples", r.pair_samples);
  w.field("Aprime_size", r.Aprime_size);
  w.field("eta", r.eta);
  w.field("extraction_guarantee", r.extraction_guarantee);
  w.field("extraction_verdict", r.extraction_verdict);
  w.field("ap3_nontrivial", r.ap3_nontrivial);
  w.field("ap3_trivial", r.ap3_trivial);
  w.field("ap3_a0_nontrivial", r.ap3_a0_nontrivial);
  w.field("ap3_a0_trivial", r.ap3_a0_trivial);
  w.field("varnavides_value", r.varnavides_value);
  w.field("selfcount_verdict", r.selfcount_verdict);
  w.field("final_lhs", r.final_lhs);
  w.field("final_rhs", r.final_rhs);
  w.field("final_winner", r.final_winner);
  w.field("overall", r.overall);
  w.timings("timings", r.timings);
  return w.str();
}

PipelineReport report_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw input_error(std::string("report_from_json: ") + e.what());
  }
  try {
    PipelineReport r;
    r.N = j.at("N").get<std::uint64_t>();
    r.z = j.at("z").get<double>();
    r.M = j.at("M").get<std::uint64_t>();
    r.Nprime = j.at("Nprime").get<std::uint64_t>();
    r.b = j.at("b").get<std::uint64_t>();
    r.A_size = j.at("A_size").get<std::uint64_t>();
    r.alpha_measured = j.at("alpha_measured").get<double>();
    r.A0_size = j.at("A0_size").get<std::uint64_t>();
    r.a_l1 = j.at("a_l1").get<double>();
    r.moment_p53 = j.at("moment_p53").get<double>();
    r.moment_p52 = j.at("moment_p52").get<double>();
    r.moment_p103 = j.at("moment_p103").get<double>();
    r.delta = j.at("delta").get<double>();
    r.epsilon = j.at("epsilon").get<double>();
    r.spectrum_size = j.at("spectrum_size").get<std::uint64_t>();
    r.spectrum_bound = j.at("spectrum_bound").get<double>();
    r.spectrum_certificate = j.at("spectrum_certificate").get<std::string>();
    r.bohr_size = j.at("bohr_size").get<std::uint64_t>();
    r.pigeonhole_bound = j.at("pigeonhole_bound").get<double>();
    r.pigeonhole_verdict = j.at("pigeonhole_verdict").get<std::string>();
    r.bohr_condition_rhs = j.at("bohr_condition_rhs").get<double>();
    r.bohr_condition = j.at("bohr_condition").get<std::string>();
    r.kernel_deviation_value = j.at("kernel_deviation_value").get<double>();
    r.kernel_deviation_cap = j.at("kernel_deviation_cap").get<double>();
    r.kernel_deviation_verdict = j.at("kernel_deviation_verdict").get<std::string>();
    r.a1_l1 = j.at("a1_l1").get<double>();
    r.l1_preservation = j.at("l1_preservation").get<std::string>();
    r.delta_direct = j.at("delta_direct").get<double>();
    r.delta_fourier = j.at("delta_fourier").get<double>();
    r.delta_ratio = j.at("delta_ratio").get<double>();
    r.delta_consistency = j.at("delta_consistency").get<std::string>();
    r.holder_lhs = j.at("holder_lhs").get<double>();
    r.holder_rhs = j.at("holder_rhs").get<double>();
    r.holder_verdict = j.at("holder_verdict").get<std::string>();
    r.majorant_domination = j.at("majorant_domination").get<std::string>();
    r.a1_l2sq_times_Nprime = j.at("a1_l2sq_times_Nprime").get<double>();
    r.l2_lhs = j.at("l2_lhs").get<double>();
    r.l2_mid = j.at("l2_mid").get<double>();
    r.l2_rhs = j.at("l2_rhs").get<double>();
    r.l2_rhs_sq_times_Nprime = j.at("l2_rhs_sq_times_Nprime").get<double>();
    r.l2_chain = j.at("l2_chain").get<std::string>();
    r.pair_ratio_max = j.at("pair_ratio_max").get<double>();
    r.pair_ratio_diagonal = j.at("pair_ratio_diagonal").get<double>();
    r.pair_samples = j.at("pair_samples").get<std::uint64_t>();
    r.Aprime_size = j.at("Aprime_size").get<std::uint64_t>();
    r.eta = j.at("eta").get<double>();
    r.extraction_guarantee = j.at("extraction_guarantee").get<double>();
    r.extraction_verdict = j.at("extraction_verdict").get<std::string>();
    r.ap3_nontrivial = j.at("ap3_nontrivial").get<std::uint64_t>();
    r.ap3_trivial = j.at("ap3_trivial").get<std::uint64_t>();
    r.ap3_a0_nontrivial = j.at("ap3_a0_nontrivial").get<std::uint64_t>();
    r.ap3_a0_trivial = j.at("ap3_a0_trivial").get<std::uint64_t>();
    r.varnavides_value = j.at("varnavides_value").get<double>();
    r.selfcount_verdict = j.at("selfcount_verdict").get<std::string>();
    r.final_lhs = j.at("final_lhs").get<double>();
    r.final_rhs = j.at("final_rhs").get<double>();
    r.final_winner = j.at("final_winner").get<std::string>();
    r.overall = j.at("overall").get<std::string>();
    for (const auto& t : j.at("timings")) {
      r.timings.push_back({t.at("stage").get<std::string>(), t.at("ms").get<double>()});
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw input_error(std::string("report_from_json: ") + e.what());
  }
}

std::string report_to_csv(const PipelineReport& r) {
  const std::string json = report_to_json(r);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(json);
  std::ostringstream out;
  out << "key,value\n";
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (it.key() == "timings") continue;
    if (it->is_string())
      out << it.key() << "," << it->get<std::string>() << "\n";
    else
      out << it.key() << "," << it->dump() << "\n";
  }
  for (const auto& t : r.timings)
    out << "timing." << t.stage << "," << fmt_double(t.ms) << "\n";
  return out.str();
}

void write_spectrum_csv(std::ostream& out, const ComplexCyclicFunction& fhat) {
  out << "m,re,im,abs\n";
  for (std::uint64_t m = 0; m < fhat.values.size(); ++m) {
    const auto& v = fhat.values[m];
    out << m << "," << fmt_double(v.real()) << "," << fmt_double(v.imag()) << ","
        << fmt_double(std::abs(v)) << "\n";
  }
}

}  // namespace rothlab
