#pragma once

#include <json.hpp>

#include "xdiscord/discord.hpp"
#include "xdiscord/explorer.hpp"
#include "xdiscord/povm.hpp"
#include "xdiscord/xstate.hpp"

// JSON bindings for the domain types. Field names match the struct members;
// complex entries of RawXState are written as [re, im] and may be read back
// from either a number or a two-element array.

namespace xdiscord {

inline void to_json(nlohmann::json& j, const BlochParams& p) {
  j = {{"x", p.x}, {"y", p.y}, {"t", p.t}, {"s", p.s}, {"u", p.u}};
}

inline void from_json(const nlohmann::json& j, BlochParams& p) {
  j.at("x").get_to(p.x);
  j.at("y").get_to(p.y);
  j.at("t").get_to(p.t);
  j.at("s").get_to(p.s);
  j.at("u").get_to(p.u);
}

inline void to_json(nlohmann::json& j, const CanonicalXState& st) {
  j = {{"rho00", st.rho00}, {"rho11", st.rho11}, {"rho22", st.rho22},
       {"rho33", st.rho33}, {"rho03", st.rho03}, {"rho12", st.rho12}};
}

inline void from_json(const nlohmann::json& j, CanonicalXState& st) {
  j.at("rho00").get_to(st.rho00);
  j.at("rho11").get_to(st.rho11);
  j.at("rho22").get_to(st.rho22);
  j.at("rho33").get_to(st.rho33);
  j.at("rho03").get_to(st.rho03);
  j.at("rho12").get_to(st.rho12);
}

namespace detail {

inline std::complex<double> complex_from_json(const nlohmann::json& j) {
  if (j.is_array()) {
    if (j.size() != 2) throw DomainError("complex entry must be [re, im]");
    return {j.at(0).get<double>(), j.at(1).get<double>()};
  }
  return {j.get<double>(), 0.0};
}

}  // namespace detail

inline void to_json(nlohmann::json& j, const RawXState& r) {
  j = {{"rho00", r.rho00},
       {"rho11", r.rho11},
       {"rho22", r.rho22},
       {"rho33", r.rho33},
       {"rho03", {r.rho03.real(), r.rho03.imag()}},
       {"rho12", {r.rho12.real(), r.rho12.imag()}}};
}

inline void from_json(const nlohmann::json& j, RawXState& r) {
  j.at("rho00").get_to(r.rho00);
  j.at("rho11").get_to(r.rho11);
  j.at("rho22").get_to(r.rho22);
  j.at("rho33").get_to(r.rho33);
  r.rho03 = detail::complex_from_json(j.at("rho03"));
  r.rho12 = detail::complex_from_json(j.at("rho12"));
}

inline void to_json(nlohmann::json& j, const PovmElement& e) {
  j = {{"mu", e.mu}, {"n", {e.n[0], e.n[1], e.n[2]}}};
}

inline void from_json(const nlohmann::json& j, PovmElement& e) {
  j.at("mu").get_to(e.mu);
  const auto& n = j.at("n");
  if (!n.is_array() || n.size() != 3) throw DomainError("POVM direction must be [nx, ny, nz]");
  for (int i = 0; i < 3; ++i) n.at(i).get_to(e.n[i]);
}

inline void to_json(nlohmann::json& j, const Povm& povm) {
  j = {{"elements", povm.elements()}};
}

inline Povm povm_from_json(const nlohmann::json& j) {
  return Povm(j.at("elements").get<std::vector<PovmElement>>());
}

inline void to_json(nlohmann::json& j, const DiscordResult& r) {
  j = {{"discord", r.discord},
       {"classical_correlation", r.classical_correlation},
       {"mutual_information", r.mutual_information},
       {"optimal_nz", r.optimal_nz},
       {"method", to_string(r.method)}};
}

inline void to_json(nlohmann::json& j, const SearchReport& rep) {
  j = {{"samples", rep.samples},
       {"violations", rep.violations},
       {"violation_rate", rep.violation_rate},
       {"max_gap", rep.max_gap},
       {"max_gap_params", rep.max_gap_params},
       {"seed", rep.seed},
       {"constraint", rep.constraint},
       {"sampling_law", rep.sampling_law},
       {"gap_tol", rep.gap_tol},
       {"acceptance_rate", rep.acceptance_rate},
       {"probe_params", rep.probe_params},
       {"probe_gap", rep.probe_gap}};
}

inline void to_json(nlohmann::json& j, const XmPoint& p) {
  j = {{"m", p.m},
       {"eps", p.eps},
       {"theta_opt", p.theta_opt},
       {"delta", p.delta},
       {"delta_tilde", p.delta_tilde}};
}

}  // namespace xdiscord
