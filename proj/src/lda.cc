// Apache License, Version 2.0, refer to LICENSE.txt

#include "topicgap/lda.h"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "topicgap/errors.h"
#include "topicgap/log.h"

namespace topicgap {

void LdaConfig::Validate() const {
  if (num_topics < 1) throw ConfigError("num_topics must be >= 1");
  if (!(ResolvedAlpha() > 0.0)) throw ConfigError("alpha must be > 0");
  if (!(beta > 0.0)) throw ConfigError("beta must be > 0");
  if (sweeps < 1) throw ConfigError("sweeps must be >= 1");
  if (burn_in < 0 || burn_in >= sweeps) {
    throw ConfigError("burn_in must lie in [0, sweeps)");
  }
  if (sample_lag < 1) throw ConfigError("sample_lag must be >= 1");
}

LdaState::LdaState(std::vector<std::vector<int>> docs, int num_topics,
                   int vocab_size)
    : num_topics_(num_topics),
      vocab_size_(vocab_size),
      docs_(std::move(docs)),
      n_dk_(docs_.size() * num_topics, 0),
      n_kw_(static_cast<std::size_t>(num_topics) * vocab_size, 0),
      n_k_(num_topics, 0),
      n_d_(docs_.size(), 0),
      scratch_(num_topics, 0.0) {
  z_.resize(docs_.size());
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    z_[d].assign(docs_[d].size(), 0);
    for (std::size_t i = 0; i < docs_[d].size(); ++i) {
      const int w = docs_[d][i];
      if (w < 0 || w >= vocab_size) {
        throw DataError("word id out of range in token stream");
      }
      Assign(d, i, 0, +1);
    }
    n_d_[d] = static_cast<int>(docs_[d].size());
    total_tokens_ += docs_[d].size();
  }
}

LdaState LdaState::RandomInit(std::vector<std::vector<int>> docs,
                              int num_topics, int vocab_size, Rng& rng) {
  LdaState state(std::move(docs), num_topics, vocab_size);
  if (num_topics == 1) return state;
  for (std::size_t d = 0; d < state.docs_.size(); ++d) {
    for (std::size_t i = 0; i < state.docs_[d].size(); ++i) {
      state.Assign(d, i, 0, -1);
      state.Assign(d, i, static_cast<int>(rng.Below(num_topics)), +1);
    }
  }
  return state;
}

void LdaState::Assign(std::size_t d, std::size_t i, int k, int delta) {
  const int w = docs_[d][i];
  z_[d][i] = k;
  n_dk_[d * num_topics_ + k] += delta;
  n_kw_[static_cast<std::size_t>(k) * vocab_size_ + w] += delta;
  n_k_[k] += delta;
}

int LdaState::CountViolations() const {
  int violations = 0;
  std::size_t grand_total = 0;
  for (std::size_t d = 0; d < docs_.size(); ++d) {
    long sum = 0;
    for (int k = 0; k < num_topics_; ++k) sum += doc_topic(d, k);
    if (sum != n_d_[d]) ++violations;
    grand_total += n_d_[d];
  }
  for (int k = 0; k < num_topics_; ++k) {
    long sum = 0;
    for (int w = 0; w < vocab_size_; ++w) sum += topic_word(k, w);
    if (sum != n_k_[k]) ++violations;
  }
  if (grand_total != total_tokens_) ++violations;
  return violations;
}

void GibbsSweep(LdaState& state, const LdaConfig& config, Rng& rng) {
  const int num_topics = state.num_topics_;
  if (num_topics == 1) return;
  const double alpha = config.ResolvedAlpha();
  const double beta = config.beta;
  const double vocab_beta = state.vocab_size_ * beta;
  std::vector<double>& cumulative = state.scratch_;

  for (std::size_t d = 0; d < state.docs_.size(); ++d) {
    const int* doc_counts = &state.n_dk_[d * num_topics];
    for (std::size_t i = 0; i < state.docs_[d].size(); ++i) {
      const int w = state.docs_[d][i];
      state.Assign(d, i, state.z_[d][i], -1);

      double total = 0.0;
      for (int k = 0; k < num_topics; ++k) {
        const double word_term =
            (state.n_kw_[static_cast<std::size_t>(k) * state.vocab_size_ + w] +
             beta) /
            (state.n_k_[k] + vocab_beta);
        total += (doc_counts[k] + alpha) * word_term;
        cumulative[k] = total;
      }
      const double u = rng.Uniform() * total;
      int k = 0;
      while (k < num_topics - 1 && cumulative[k] <= u) ++k;

      state.Assign(d, i, k, +1);
    }
  }
  assert(state.CountViolations() == 0);
}

double LogLikelihood(const LdaState& state, const LdaConfig& config) {
  const int num_topics = state.num_topics();
  const int vocab_size = state.vocab_size();
  const double alpha = config.ResolvedAlpha();
  const double beta = config.beta;

  double ll = 0.0;
  const double topic_norm =
      std::lgamma(vocab_size * beta) - vocab_size * std::lgamma(beta);
  for (int k = 0; k < num_topics; ++k) {
    double s = topic_norm;
    for (int w = 0; w < vocab_size; ++w) {
      s += std::lgamma(state.topic_word(k, w) + beta);
    }
    s -= std::lgamma(state.topic_total(k) + vocab_size * beta);
    ll += s;
  }
  const double doc_norm =
      std::lgamma(num_topics * alpha) - num_topics * std::lgamma(alpha);
  for (std::size_t d = 0; d < state.num_docs(); ++d) {
    double s = doc_norm;
    for (int k = 0; k < num_topics; ++k) {
      s += std::lgamma(state.doc_topic(d, k) + alpha);
    }
    s -= std::lgamma(state.doc_length(d) + num_topics * alpha);
    ll += s;
  }
  return ll;
}

namespace {

// Sweeps (1-based) after which the estimates are sampled.
bool IsSampleSweep(int sweep, const LdaConfig& config) {
  const int after = sweep - config.burn_in;
  if (after <= 0) return false;
  if (after % config.sample_lag == 0) return true;
  // Short post-burn-in windows still yield the final state.
  return sweep == config.sweeps && config.sweeps - config.burn_in <
                                        config.sample_lag;
}

}  // namespace

TopicModel FitLda(const std::vector<std::vector<int>>& token_streams,
                  int vocab_size, const LdaConfig& config,
                  const SweepObserver& observer) {
  config.Validate();
  if (vocab_size < 1) throw DataError("vocabulary is empty");

  const int num_topics = config.num_topics;
  const std::size_t num_docs = token_streams.size();
  std::vector<std::size_t> fitted_index;
  std::vector<std::vector<int>> fitted_docs;
  for (std::size_t d = 0; d < num_docs; ++d) {
    if (token_streams[d].empty()) continue;
    fitted_index.push_back(d);
    fitted_docs.push_back(token_streams[d]);
  }
  if (fitted_docs.empty()) {
    throw DataError("all documents are empty after preprocessing");
  }
  if (fitted_docs.size() < num_docs) {
    Warn("{} of {} documents have no tokens and are excluded from fitting",
         num_docs - fitted_docs.size(), num_docs);
  }

  Rng rng(config.seed);
  LdaState state = LdaState::RandomInit(std::move(fitted_docs), num_topics,
                                        vocab_size, rng);
  if (state.total_tokens() < static_cast<std::size_t>(num_topics)) {
    Warn("more topics ({}) than tokens ({})", num_topics,
         state.total_tokens());
  }

  const double alpha = config.ResolvedAlpha();
  const double beta = config.beta;
  std::vector<double> phi_sum(static_cast<std::size_t>(num_topics) * vocab_size,
                              0.0);
  std::vector<double> theta_sum(state.num_docs() * num_topics, 0.0);
  int samples = 0;

  for (int sweep = 1; sweep <= config.sweeps; ++sweep) {
    GibbsSweep(state, config, rng);
    if (observer) observer(sweep, state);
    if (!IsSampleSweep(sweep, config)) continue;
    ++samples;
    for (int k = 0; k < num_topics; ++k) {
      const double denom = state.topic_total(k) + vocab_size * beta;
      double* row = &phi_sum[static_cast<std::size_t>(k) * vocab_size];
      for (int w = 0; w < vocab_size; ++w) {
        row[w] += (state.topic_word(k, w) + beta) / denom;
      }
    }
    for (std::size_t d = 0; d < state.num_docs(); ++d) {
      const double denom = state.doc_length(d) + num_topics * alpha;
      double* row = &theta_sum[d * num_topics];
      for (int k = 0; k < num_topics; ++k) {
        row[k] += (state.doc_topic(d, k) + alpha) / denom;
      }
    }
  }

  TopicModel model;
  model.config = config;
  model.num_topics = num_topics;
  model.vocab_size = vocab_size;
  model.phi = std::move(phi_sum);
  for (double& p : model.phi) p /= samples;
  model.theta.assign(num_docs * num_topics, 1.0 / num_topics);
  model.fitted.assign(num_docs, false);
  for (std::size_t j = 0; j < fitted_index.size(); ++j) {
    const std::size_t d = fitted_index[j];
    model.fitted[d] = true;
    for (int k = 0; k < num_topics; ++k) {
      model.theta[d * num_topics + k] = theta_sum[j * num_topics + k] / samples;
    }
  }
  return model;
}

std::vector<int> TopWordIds(const TopicModel& model, int topic, int n) {
  if (topic < 0 || topic >= model.num_topics) {
    throw std::out_of_range("topic index out of range");
  }
  if (n < 0 || n > model.vocab_size) {
    throw std::invalid_argument("n must lie in [0, vocabulary size]");
  }
  const auto row = model.PhiRow(topic);
  std::vector<int> ids(model.vocab_size);
  std::iota(ids.begin(), ids.end(), 0);
  std::partial_sort(ids.begin(), ids.begin() + n, ids.end(),
                    [&](int a, int b) {
                      if (row[a] != row[b]) return row[a] > row[b];
                      return a < b;
                    });
  ids.resize(n);
  return ids;
}

std::vector<std::string> TopWords(const TopicModel& model, int topic, int n) {
  if (model.vocabulary.size() != static_cast<std::size_t>(model.vocab_size)) {
    throw std::logic_error("model has no vocabulary attached");
  }
  std::vector<std::string> words;
  for (int id : TopWordIds(model, topic, n)) {
    words.push_back(model.vocabulary.Destem(id));
  }
  return words;
}

}  // namespace topicgap
