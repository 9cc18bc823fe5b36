#ifndef BOOKSUIT_ANN_HPP
#define BOOKSUIT_ANN_HPP

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "booksuit/dataset.hpp"

namespace booksuit {

/// 14 -> h1 -> h2 -> 1 dense network; rectifier hidden layers, logistic
/// output. The input width is fixed by the 14-feature vector.
struct NetworkConfig {
    int hidden1 = 32;
    int hidden2 = 16;
    std::uint64_t seed = 42;

    std::array<int, 4> layer_sizes() const { return {14, hidden1, hidden2, 1}; }
    void validate() const; // ContractError on nonpositive widths
};

struct TrainConfig {
    int epochs = 150;
    int batch_size = 16;
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
    std::uint64_t shuffle_seed = 1;
};

/// Weights, biases and Adam state. weights[l] has shape (out x in).
struct ModelParams {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
    std::vector<Eigen::MatrixXd> m_weights, v_weights;
    std::vector<Eigen::VectorXd> m_biases, v_biases;
    long step = 0;
};

struct Gradients {
    std::vector<Eigen::MatrixXd> weights;
    std::vector<Eigen::VectorXd> biases;
};

/// Per-feature standardization fitted on training rows only. Zero-variance
/// features scale by 1 and are reported rather than dividing by zero.
struct Scaler {
    Eigen::VectorXd mean;
    Eigen::VectorXd stddev;
    std::vector<int> zero_variance_features;

    static Scaler fit(const Eigen::MatrixXd& rows);
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;
    Eigen::MatrixXd apply_columns(const Eigen::MatrixXd& columns) const;
};

/// He-scaled normal init on the rectifier layers, 1/fan_in on the output,
/// zero biases; fully determined by config.seed.
ModelParams init_params(const NetworkConfig& config);

/// Probability that the (already scaled) feature vector is suitable.
double forward(const ModelParams& params, const Eigen::VectorXd& scaled_features);

/// Columns are samples. Returns one probability per column.
Eigen::RowVectorXd forward_batch(const ModelParams& params, const Eigen::MatrixXd& inputs);

/// Mean binary cross-entropy over the batch and its parameter gradients.
double backward(const ModelParams& params, const Eigen::MatrixXd& inputs,
                const Eigen::RowVectorXd& labels, Gradients& grads);

void adam_step(ModelParams& params, const Gradients& grads, const TrainConfig& config);

struct EpochStats {
    int epoch = 0;
    double loss = 0.0;
    double accuracy = 0.0;
};

struct TrainResult {
    NetworkConfig network;
    ModelParams params;
    Scaler scaler;
    std::vector<EpochStats> history;
};

/// Fit scaler on the given (training) records, then run seeded mini-batch
/// Adam. Refuses single-class or unlabeled datasets.
TrainResult train(const std::vector<DatasetRecord>& records, const NetworkConfig& network,
                  const TrainConfig& config);

struct GridCell {
    int batch_size = 0;
    int epochs = 0;
    double mean_accuracy = 0.0;
    double sd_accuracy = 0.0;
    bool failed = false;
    std::string error;
};

struct GridResult {
    std::vector<GridCell> cells; // sorted by mean accuracy (desc), then key
    GridCell best;
};

/// k-fold cross-validated accuracy for every (batch_size, epochs) pair.
/// Cells whose training fails are marked and skipped in the ranking.
GridResult grid_search(const std::vector<DatasetRecord>& records,
                       const std::vector<int>& batch_sizes, const std::vector<int>& epoch_counts,
                       const NetworkConfig& network, const TrainConfig& base_config, int folds = 5,
                       std::uint64_t fold_seed = 99);

/// Persisted network: everything needed to score raw feature vectors.
struct Model {
    NetworkConfig network;
    ModelParams params;
    Scaler scaler;

    /// Scale then forward; the public prediction path.
    double predict(const Vector14& raw_features) const;
};

/// Versioned JSON round trip; load(save(m)) reproduces predictions
/// bit for bit. Corrupt or mismatched files raise ParseError.
void save_model(const Model& model, const std::filesystem::path& path);
Model load_model(const std::filesystem::path& path);

} // namespace booksuit

#endif
