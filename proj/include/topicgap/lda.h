// Apache License, Version 2.0, refer to LICENSE.txt
//
// Latent Dirichlet allocation fitted by collapsed Gibbs sampling.
//
// The sampler resamples every token's topic from
//
//   P(z = k | rest) ∝ (n_dk + alpha) (n_kw + beta) / (n_k + V beta)
//
// with the token's own assignment removed from the counts. After burn-in,
// the smoothed estimates
//
//   phi[k][w]   = (n_kw + beta)  / (n_k + V beta)
//   theta[d][k] = (n_dk + alpha) / (n_d + K alpha)
//
// are averaged over samples taken every `sample_lag` sweeps. Sequential
// sampling with a fixed seed is bit-reproducible.

#ifndef TOPICGAP_LDA_H_
#define TOPICGAP_LDA_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "topicgap/vocabulary.h"

namespace topicgap {

struct LdaConfig {
  int num_topics = 100;
  // Symmetric document-topic prior; 50 / num_topics when unset.
  std::optional<double> alpha;
  double beta = 0.01;
  int sweeps = 1000;
  int burn_in = 800;
  int sample_lag = 10;
  std::uint64_t seed = 0;

  double ResolvedAlpha() const {
    return alpha ? *alpha : 50.0 / static_cast<double>(num_topics);
  }
  // Throws ConfigError.
  void Validate() const;
};

// Seeded generator shared by the sampler and the synthetic generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform on [0, 1) with 53 random bits; identical on every platform.
  double Uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // Uniform integer in [0, n).
  std::uint64_t Below(std::uint64_t n) {
    return static_cast<std::uint64_t>(Uniform() * static_cast<double>(n));
  }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

// Sampler state: per-token assignments and the count tables they imply.
class LdaState {
 public:
  // Every token starts in topic 0.
  LdaState(std::vector<std::vector<int>> docs, int num_topics, int vocab_size);
  // Uniformly random initial assignments.
  static LdaState RandomInit(std::vector<std::vector<int>> docs, int num_topics,
                             int vocab_size, Rng& rng);

  int num_topics() const { return num_topics_; }
  int vocab_size() const { return vocab_size_; }
  std::size_t num_docs() const { return docs_.size(); }
  std::size_t total_tokens() const { return total_tokens_; }

  const std::vector<std::vector<int>>& docs() const { return docs_; }
  const std::vector<std::vector<int>>& z() const { return z_; }
  int doc_topic(std::size_t d, int k) const {
    return n_dk_[d * num_topics_ + k];
  }
  int topic_word(int k, int w) const {
    return n_kw_[static_cast<std::size_t>(k) * vocab_size_ + w];
  }
  int topic_total(int k) const { return n_k_[k]; }
  int doc_length(std::size_t d) const { return n_d_[d]; }

  // Number of violated count identities (0 for a consistent state):
  // row sums of n_dk against n_d, row sums of n_kw against n_k, and the
  // grand total against the token count.
  int CountViolations() const;

 private:
  friend void GibbsSweep(LdaState&, const LdaConfig&, Rng&);

  void Assign(std::size_t d, std::size_t i, int k, int delta);

  int num_topics_;
  int vocab_size_;
  std::size_t total_tokens_ = 0;
  std::vector<std::vector<int>> docs_;
  std::vector<std::vector<int>> z_;
  std::vector<int> n_dk_;
  std::vector<int> n_kw_;
  std::vector<int> n_k_;
  std::vector<int> n_d_;
  std::vector<double> scratch_;
};

// Resamples every token exactly once, in document order.
void GibbsSweep(LdaState& state, const LdaConfig& config, Rng& rng);

// Collapsed joint log p(w, z | alpha, beta).
double LogLikelihood(const LdaState& state, const LdaConfig& config);

struct TopicModel {
  LdaConfig config;
  int num_topics = 0;
  int vocab_size = 0;
  // num_topics x vocab_size, row-major.
  std::vector<double> phi;
  // num_docs x num_topics, row-major. Documents without tokens were not
  // fitted and carry a uniform row.
  std::vector<double> theta;
  std::vector<bool> fitted;
  Vocabulary vocabulary;
  std::vector<std::string> doc_ids;

  std::size_t num_docs() const { return fitted.size(); }
  std::span<const double> PhiRow(int k) const {
    return {phi.data() + static_cast<std::size_t>(k) * vocab_size,
            static_cast<std::size_t>(vocab_size)};
  }
  std::span<const double> ThetaRow(std::size_t d) const {
    return {theta.data() + d * num_topics, static_cast<std::size_t>(num_topics)};
  }
};

// Called after each sweep (1-based) with the current state.
using SweepObserver = std::function<void(int sweep, const LdaState& state)>;

// Fits over per-document stem-id streams. Empty streams are excluded from
// sampling with a warning. Throws DataError when every stream is empty.
TopicModel FitLda(const std::vector<std::vector<int>>& token_streams,
                  int vocab_size, const LdaConfig& config,
                  const SweepObserver& observer = {});

// Highest-phi word ids of a topic, descending phi, ties by ascending id.
std::vector<int> TopWordIds(const TopicModel& model, int topic, int n = 10);
// Same, rendered through the model's vocabulary de-stem map.
std::vector<std::string> TopWords(const TopicModel& model, int topic,
                                  int n = 10);

}  // namespace topicgap

#endif  // TOPICGAP_LDA_H_
