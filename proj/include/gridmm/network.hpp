#pragma once

#include <complex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridmm {

using Complex = std::complex<double>;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NonRadialError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DuplicateSlackError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingBusError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// System base quantities. v_base is line-to-line volts, s_base three-phase VA.
struct PerUnitBase {
  double v_base = 0.0;
  double s_base = 0.0;
  double f_hz = 50.0;

  double z_base() const { return v_base * v_base / s_base; }
  double i_base() const { return s_base / (std::sqrt(3.0) * v_base); }
  double omega() const;
};

enum class BusKind { Slack, Pq };

struct Bus {
  int id = 0;
  BusKind kind = BusKind::Pq;
  double v_min = 0.9;
  double v_max = 1.1;
  Complex fixed_injection;  // per-unit, injection-positive (loads negative)
};

/// Pi-model line. Primitive parameters are SI per km; admittances per-unit.
struct Line {
  int id = 0;
  int bus_plus = 0;   // index of the receiving-end bus
  int bus_minus = 0;  // index of the sending-end bus
  double r_ohm_per_km = 0.0;
  double l_h_per_km = 0.0;
  double c_f_per_km = 0.0;
  double length_km = 0.0;
  double extra_shunt_f[2] = {0.0, 0.0};  // lumped capacitor folded per end
  double i_max = 0.0;                    // ampacity, per-unit, both ends

  Complex y_long;         // longitudinal admittance, per-unit
  Complex y_shunt[2];     // end shunt admittances, per-unit
};

/// Tap-changing transformer occupying one branch. alpha(k) = 1 + range*k/steps.
struct OltcBranch {
  int line_index = 0;
  Complex y_transformer;
  int initial_tap = 0;
  int steps = 36;
  double range = 0.06;
  double movement_weight = 100.0;

  double ratio_of_tap(int k) const { return 1.0 + range * double(k) / double(steps); }
  double alpha_min() const { return 1.0 - range; }
  double alpha_max() const { return 1.0 + range; }
};

enum class DeviceKind { Pv, Box };

/// Controllable injection. Pv devices live on the disk/sector capability set,
/// Box devices on a rectangle (generators and controllable loads; loads have
/// negative injection bounds). All powers per-unit, injection-positive.
struct Device {
  int id = 0;
  int bus = 0;
  DeviceKind kind = DeviceKind::Pv;
  double s_max = 0.0;    // Pv: |S| <= s_max
  double phi_max = 0.0;  // Pv: |arg S| <= phi_max
  double p_min = 0.0, p_max = 0.0;  // Box bounds
  double q_min = 0.0, q_max = 0.0;
  double utility_weight = 0.0;  // linear weight on injected P
  double eta = 0.0;             // converter loss coefficient
  double tracking_weight = 0.0; // quadratic pull toward (p_target, q_target)
  double p_target = 0.0;
  double q_target = 0.0;
};

struct LineEnd {
  int line = 0;
  int side = 0;  // 0 = plus end, 1 = minus end
};

/// Immutable radial grid. Safe to share read-only across solver instances.
struct Network {
  PerUnitBase base;
  std::vector<Bus> buses;
  std::vector<Line> lines;
  std::vector<Device> devices;
  std::optional<OltcBranch> oltc;
  int slack = 0;

  // adjacency, built on construction
  std::vector<std::vector<LineEnd>> incident;   // per bus
  std::vector<std::vector<int>> devices_at;     // per bus

  int bus_count() const { return int(buses.size()); }
  int line_count() const { return int(lines.size()); }
  int device_count() const { return int(devices.size()); }

  int bus_of_end(const LineEnd& e) const {
    const Line& l = lines[size_t(e.line)];
    return e.side == 0 ? l.bus_plus : l.bus_minus;
  }
  bool slack_adjacent(int line) const {
    return lines[size_t(line)].bus_plus == slack || lines[size_t(line)].bus_minus == slack;
  }
};

/// Solver knobs shared by the central and distributed algorithms.
struct Gains {
  double rho0 = 1e4;          // penalty weight
  double rho_growth = 1.0;    // geometric factor per outer iteration
  double rho_max = 1e8;
  double lambda_max = 1e6;    // multiplier box, per component
  double alpha0 = 1e-3;       // initial inner step
  double backtrack = 0.5;
  double eps0 = 1e-2;         // inner tolerance schedule eps_k = max(eps_min, eps0/2^k)
  double eps_min = 1e-6;
  double delta = 1e-3;        // outer stop on |dlambda|_inf
  int max_outer = 200;
  int max_inner = 200000;
};

struct ClockConfig {
  double rate_fast = 20.0;  // primal updates (C2)
  double rate_slow = 1.0;   // multiplier updates (C1)
  std::uint64_t event_budget = 4000000;
  std::uint64_t seed = 1;
};

struct AdmmSettings {
  double omega = 1.0;
  double tol = 1e-4;
  int max_iter = 10000;
  int newton_max = 60;
  int multi_start = 3;
};

/// A scenario file: the grid plus solver defaults.
struct Scenario {
  Network net;
  Gains gains;
  ClockConfig clocks;
  AdmmSettings admm;
};

/// Per-unit admittance triple of a pi element.
struct AdmittanceTriple {
  Complex y_long;
  Complex y_shunt_plus;
  Complex y_shunt_minus;
};

/// Pi admittances of a physical line from its primitive SI parameters.
AdmittanceTriple line_admittances(const Line& line, const PerUnitBase& base);

/// Tap-dependent admittances of a transformer branch:
/// (alpha*Yt, alpha*(alpha-1)*Yt, (1-alpha)*Yt).
AdmittanceTriple oltc_admittances(Complex y_t, double alpha);

/// Parse and validate a scenario document (see README for the schema).
Scenario load_scenario(const std::string& text);

/// Convenience wrapper returning only the network.
Network load_network(const std::string& text);

}  // namespace gridmm
