#pragma once

#include <cstdint>
#include <vector>

#include "core/matrix.hpp"

namespace tsa {

// Neuron constants shared by every neuron in a network. The discrete update
// uses exponential decay factors alpha (synaptic) and beta (membrane).
struct LifConfig {
  double dt = 1e-3;       // seconds per simulation step
  double tau_syn = 1e-2;  // synaptic time constant, seconds
  double tau_mem = 1e-3;  // membrane time constant, seconds
  double theta = 1.0;     // firing threshold
  double u_rest = 0.0;    // resting potential
  double u_reset = 0.0;   // post-spike reset potential

  double alpha() const;  // exp(-dt / tau_syn), in (0, 1)
  double beta() const;   // exp(-dt / tau_mem), in (0, 1)
  void validate() const;
};

// Synaptic current and membrane potential of one layer.
struct LayerState {
  std::vector<double> syn;
  std::vector<double> mem;

  static LayerState zeros(int64_t size);
  void validate_finite() const;
};

// Recurrent state of a whole network: one LayerState per non-input layer.
struct NeuronState {
  std::vector<LayerState> layers;

  static NeuronState zeros(const std::vector<int64_t>& layer_sizes);
};

struct Network {
  std::vector<int64_t> layer_sizes;  // [D, H1, ..., O]
  std::vector<Matrix> weights;       // weights[l]: layer_sizes[l] x layer_sizes[l+1]
  LifConfig config;

  int64_t num_layers() const { return static_cast<int64_t>(layer_sizes.size()); }
  int64_t input_size() const { return layer_sizes.front(); }
  int64_t output_size() const { return layer_sizes.back(); }
  void validate() const;

  // Zero-mean Gaussian weights scaled by 1/sqrt(fan-in), deterministic in seed.
  static Network random(const std::vector<int64_t>& layer_sizes, const LifConfig& config,
                        uint64_t seed);
};

// Spike trains of the input and hidden layers plus the readout membrane trace.
struct SimulationTrace {
  std::vector<Matrix> spikes;  // spikes[0] = input copy; one entry per layer 0..L-2
  Matrix out_potentials;       // O x T
  NeuronState final_state;

  int64_t steps() const { return out_potentials.cols; }
};

// One integration step of a spiking layer:
//   mem' = u_rest + beta * (mem - u_rest) + syn   (synaptic current from before
//                                                  this step's input arrives)
//   syn' = alpha * syn + input_current
//   spike_i = 1 iff mem'_i > theta, in which case mem'_i is reset to u_reset.
// Returns the binary spike vector.
std::vector<uint8_t> lif_step(LayerState& state, const std::vector<double>& input_current,
                              const LifConfig& config);

// Simulates the network over a binary input window (D x T). Hidden layers
// spike; the output layer is a non-spiking leaky integrator whose membrane
// potentials are recorded as the readout. Layer l+1 receives the spike vector
// of layer l at the same step, propagated through weights[l].
SimulationTrace forward(const Network& net, const BinaryMatrix& x, const NeuronState& initial);

// Predicted class at step t: argmax of the readout potentials, ties broken by
// the lowest class index.
int32_t predict(const SimulationTrace& trace, int64_t t);

// Per-step argmax predictions over a long input without retaining the trace.
// Used for whole-split metrics where storing every spike would be wasteful.
std::vector<int32_t> stream_predictions(const Network& net, const BinaryMatrix& x,
                                        NeuronState* state_io = nullptr);

}  // namespace tsa
