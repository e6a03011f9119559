#include "core/lif.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "core/error.hpp"
#include "core/rng.hpp"

namespace tsa {

double LifConfig::alpha() const { return std::exp(-dt / tau_syn); }
double LifConfig::beta() const { return std::exp(-dt / tau_mem); }

void LifConfig::validate() const {
  check(dt > 0.0, ErrorCode::InvalidArgument, "lif config: dt must be positive");
  check(tau_syn > 0.0, ErrorCode::InvalidArgument, "lif config: tau_syn must be positive");
  check(tau_mem > 0.0, ErrorCode::InvalidArgument, "lif config: tau_mem must be positive");
  check(theta > u_rest, ErrorCode::InvalidArgument, "lif config: theta must exceed u_rest");
  check(u_reset <= u_rest, ErrorCode::InvalidArgument, "lif config: u_reset must not exceed u_rest");
  const double a = alpha();
  const double b = beta();
  check(a > 0.0 && a < 1.0 && b > 0.0 && b < 1.0, ErrorCode::InvalidArgument,
        "lif config: decay factors must lie in (0,1)");
}

LayerState LayerState::zeros(int64_t size) {
  LayerState s;
  s.syn.assign(static_cast<size_t>(size), 0.0);
  s.mem.assign(static_cast<size_t>(size), 0.0);
  return s;
}

void LayerState::validate_finite() const {
  for (double v : syn) check(std::isfinite(v), ErrorCode::Numeric, "layer state: non-finite syn");
  for (double v : mem) check(std::isfinite(v), ErrorCode::Numeric, "layer state: non-finite mem");
}

NeuronState NeuronState::zeros(const std::vector<int64_t>& layer_sizes) {
  NeuronState state;
  for (size_t l = 1; l < layer_sizes.size(); ++l) {
    state.layers.push_back(LayerState::zeros(layer_sizes[l]));
  }
  return state;
}

void Network::validate() const {
  check(layer_sizes.size() >= 2, ErrorCode::InvalidArgument, "network: needs at least two layers");
  for (int64_t s : layer_sizes) {
    check(s > 0, ErrorCode::InvalidArgument, "network: layer sizes must be positive");
  }
  check(weights.size() == layer_sizes.size() - 1, ErrorCode::Dimension,
        "network: weight matrix count must be layer count minus one");
  for (size_t l = 0; l < weights.size(); ++l) {
    check(weights[l].rows == layer_sizes[l] && weights[l].cols == layer_sizes[l + 1],
          ErrorCode::Dimension,
          "network: weight matrix " + std::to_string(l) + " has wrong shape");
    for (double w : weights[l].data) {
      check(std::isfinite(w), ErrorCode::Numeric, "network: non-finite weight");
    }
  }
  config.validate();
}

Network Network::random(const std::vector<int64_t>& layer_sizes, const LifConfig& config,
                        uint64_t seed) {
  Network net;
  net.layer_sizes = layer_sizes;
  net.config = config;
  Rng rng(seed);
  for (size_t l = 0; l + 1 < layer_sizes.size(); ++l) {
    Matrix w(layer_sizes[l], layer_sizes[l + 1]);
    const double scale = 1.0 / std::sqrt(static_cast<double>(layer_sizes[l]));
    for (double& v : w.data) v = rng.gaussian() * scale;
    net.weights.push_back(std::move(w));
  }
  net.validate();
  return net;
}

std::vector<uint8_t> lif_step(LayerState& state, const std::vector<double>& input_current,
                              const LifConfig& config) {
  const size_t n = state.syn.size();
  check(state.mem.size() == n && input_current.size() == n, ErrorCode::Dimension,
        "lif_step: vector lengths disagree");
  for (double v : input_current) {
    check(std::isfinite(v), ErrorCode::Numeric, "lif_step: non-finite input current");
  }
  const double a = config.alpha();
  const double b = config.beta();
  std::vector<uint8_t> spikes(n, 0);
  for (size_t i = 0; i < n; ++i) {
    const double mem_next = config.u_rest + b * (state.mem[i] - config.u_rest) + state.syn[i];
    state.syn[i] = a * state.syn[i] + input_current[i];
    if (mem_next > config.theta) {
      spikes[i] = 1;
      state.mem[i] = config.u_reset;
    } else {
      state.mem[i] = mem_next;
    }
  }
  return spikes;
}

SimulationTrace forward(const Network& net, const BinaryMatrix& x, const NeuronState& initial) {
  net.validate();
  check(x.rows == net.input_size(), ErrorCode::Dimension,
        "forward: input rows do not match the input layer size");
  for (uint8_t v : x.data) {
    check(v == 0 || v == 1, ErrorCode::InvalidArgument, "forward: input entries must be binary");
  }
  check(static_cast<int64_t>(initial.layers.size()) == net.num_layers() - 1, ErrorCode::Dimension,
        "forward: initial state layer count mismatch");
  for (int64_t l = 1; l < net.num_layers(); ++l) {
    check(static_cast<int64_t>(initial.layers[l - 1].syn.size()) == net.layer_sizes[l],
          ErrorCode::Dimension, "forward: initial state layer size mismatch");
    initial.layers[l - 1].validate_finite();
  }

  const int64_t num_layers = net.num_layers();
  const int64_t steps = x.cols;
  SimulationTrace trace;
  trace.final_state = initial;

  // Input spike train is recorded as layer 0 of the trace.
  trace.spikes.emplace_back(x.rows, steps);
  for (int64_t r = 0; r < x.rows; ++r) {
    for (int64_t c = 0; c < steps; ++c) {
      trace.spikes[0].at(r, c) = static_cast<double>(x.at(r, c));
    }
  }

  // Layer l+1 depends only on layer l's spikes at the same step, so each
  // layer can be integrated over the whole window before the next.
  for (int64_t l = 1; l < num_layers; ++l) {
    const bool is_output = (l == num_layers - 1);
    const Matrix& w = net.weights[l - 1];
    const Matrix& pre = trace.spikes[l - 1];
    LayerState& state = trace.final_state.layers[l - 1];
    const int64_t size = net.layer_sizes[l];
    const double a = net.config.alpha();
    const double b = net.config.beta();

    Matrix out(size, steps);
    std::vector<double> current(static_cast<size_t>(size));
    for (int64_t n = 0; n < steps; ++n) {
      std::fill(current.begin(), current.end(), 0.0);
      for (int64_t i = 0; i < w.rows; ++i) {
        const double s = pre.at(i, n);
        if (s == 0.0) continue;
        for (int64_t j = 0; j < size; ++j) {
          current[static_cast<size_t>(j)] += s * w.at(i, j);
        }
      }
      for (int64_t j = 0; j < size; ++j) {
        const size_t ji = static_cast<size_t>(j);
        double mem_next = net.config.u_rest + b * (state.mem[ji] - net.config.u_rest) + state.syn[ji];
        state.syn[ji] = a * state.syn[ji] + current[ji];
        if (!is_output && mem_next > net.config.theta) {
          out.at(j, n) = 1.0;
          state.mem[ji] = net.config.u_reset;
        } else {
          check(std::isfinite(mem_next), ErrorCode::Numeric,
                "forward: membrane potential blew up at step " + std::to_string(n));
          out.at(j, n) = is_output ? mem_next : 0.0;
          state.mem[ji] = mem_next;
        }
      }
    }
    if (is_output) {
      trace.out_potentials = std::move(out);
    } else {
      trace.spikes.push_back(std::move(out));
    }
  }
  return trace;
}

int32_t predict(const SimulationTrace& trace, int64_t t) {
  check(t >= 0 && t < trace.steps(), ErrorCode::InvalidArgument, "predict: step out of range");
  int32_t best = 0;
  double best_value = trace.out_potentials.at(0, t);
  for (int64_t c = 1; c < trace.out_potentials.rows; ++c) {
    const double v = trace.out_potentials.at(c, t);
    if (v > best_value) {
      best_value = v;
      best = static_cast<int32_t>(c);
    }
  }
  return best;
}

std::vector<int32_t> stream_predictions(const Network& net, const BinaryMatrix& x,
                                        NeuronState* state_io) {
  net.validate();
  check(x.rows == net.input_size(), ErrorCode::Dimension,
        "stream_predictions: input rows do not match the input layer size");
  NeuronState local = NeuronState::zeros(net.layer_sizes);
  NeuronState& state = state_io ? *state_io : local;
  check(state.layers.size() == net.layer_sizes.size() - 1, ErrorCode::Dimension,
        "stream_predictions: state layer count mismatch");

  const int64_t num_layers = net.num_layers();
  const int64_t steps = x.cols;
  const double a = net.config.alpha();
  const double b = net.config.beta();

  std::vector<std::vector<double>> spikes(static_cast<size_t>(num_layers - 1));
  std::vector<int32_t> preds(static_cast<size_t>(steps), 0);
  std::vector<double> current;
  for (int64_t n = 0; n < steps; ++n) {
    for (int64_t l = 1; l < num_layers; ++l) {
      const bool is_output = (l == num_layers - 1);
      const Matrix& w = net.weights[l - 1];
      const int64_t size = net.layer_sizes[l];
      current.assign(static_cast<size_t>(size), 0.0);
      if (l == 1) {
        for (int64_t i = 0; i < w.rows; ++i) {
          if (!x.at(i, n)) continue;
          for (int64_t j = 0; j < size; ++j) current[static_cast<size_t>(j)] += w.at(i, j);
        }
      } else {
        const std::vector<double>& pre = spikes[static_cast<size_t>(l - 2)];
        for (int64_t i = 0; i < w.rows; ++i) {
          if (pre[static_cast<size_t>(i)] == 0.0) continue;
          for (int64_t j = 0; j < size; ++j) current[static_cast<size_t>(j)] += w.at(i, j);
        }
      }
      LayerState& st = state.layers[static_cast<size_t>(l - 1)];
      std::vector<double>& out_spikes = spikes[static_cast<size_t>(l - 1)];
      out_spikes.assign(static_cast<size_t>(size), 0.0);
      int32_t best = 0;
      double best_value = 0.0;
      for (int64_t j = 0; j < size; ++j) {
        const size_t ji = static_cast<size_t>(j);
        double mem_next = net.config.u_rest + b * (st.mem[ji] - net.config.u_rest) + st.syn[ji];
        st.syn[ji] = a * st.syn[ji] + current[ji];
        if (!is_output && mem_next > net.config.theta) {
          out_spikes[ji] = 1.0;
          st.mem[ji] = net.config.u_reset;
        } else {
          st.mem[ji] = mem_next;
          if (is_output && (j == 0 || mem_next > best_value)) {
            best_value = mem_next;
            best = static_cast<int32_t>(j);
          }
        }
      }
      if (is_output) preds[static_cast<size_t>(n)] = best;
    }
  }
  return preds;
}

}  // namespace tsa
