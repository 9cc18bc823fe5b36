#include "booksuit/ann.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>

#include <json.hpp>

#include "booksuit/errors.hpp"
#include "booksuit/rng.hpp"

namespace booksuit {

namespace {

constexpr double kProbFloor = 1e-12; // keeps log() away from 0

Eigen::MatrixXd records_to_columns(const std::vector<DatasetRecord>& records) {
    Eigen::MatrixXd cols(FeatureVector::kCount, static_cast<Eigen::Index>(records.size()));
    for (std::size_t i = 0; i < records.size(); ++i)
        cols.col(static_cast<Eigen::Index>(i)) = records[i].features.to_vector();
    return cols;
}

Eigen::RowVectorXd records_to_labels(const std::vector<DatasetRecord>& records) {
    Eigen::RowVectorXd y(static_cast<Eigen::Index>(records.size()));
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].suitability)
            throw ContractError("record '" + records[i].book_name + "' has no label");
        y[static_cast<Eigen::Index>(i)] = *records[i].suitability;
    }
    return y;
}

void require_two_classes(const Eigen::RowVectorXd& labels) {
    long ones = 0;
    for (Eigen::Index i = 0; i < labels.size(); ++i)
        ones += labels[i] == 1.0 ? 1 : 0;
    const long zeros = labels.size() - ones;
    if (ones < 2 || zeros < 2)
        throw ContractError("training needs at least 2 records per class (got " +
                            std::to_string(zeros) + " unsuitable, " + std::to_string(ones) +
                            " suitable)");
}

} // namespace

void NetworkConfig::validate() const {
    if (hidden1 < 1 || hidden2 < 1)
        throw ContractError("hidden layer sizes must be >= 1");
}

Scaler Scaler::fit(const Eigen::MatrixXd& rows) {
    if (rows.rows() == 0)
        throw ContractError("cannot fit scaler on an empty set");
    Scaler s;
    s.mean = rows.colwise().mean().transpose();
    const Eigen::MatrixXd centered = rows.rowwise() - s.mean.transpose();
    s.stddev = (centered.array().square().colwise().sum() /
                static_cast<double>(rows.rows()))
                   .sqrt()
                   .transpose();
    for (Eigen::Index i = 0; i < s.stddev.size(); ++i) {
        if (s.stddev[i] == 0.0) {
            s.stddev[i] = 1.0;
            s.zero_variance_features.push_back(static_cast<int>(i));
        }
    }
    return s;
}

Eigen::VectorXd Scaler::apply(const Eigen::VectorXd& x) const {
    return (x - mean).cwiseQuotient(stddev);
}

Eigen::MatrixXd Scaler::apply_columns(const Eigen::MatrixXd& columns) const {
    return (columns.colwise() - mean).array().colwise() / stddev.array();
}

ModelParams init_params(const NetworkConfig& config) {
    config.validate();
    const auto sizes = config.layer_sizes();
    Rng rng(config.seed);
    ModelParams p;
    for (std::size_t l = 0; l + 1 < sizes.size(); ++l) {
        const int fan_in = sizes[l];
        const int fan_out = sizes[l + 1];
        const bool output_layer = l + 2 == sizes.size();
        const double scale =
            std::sqrt((output_layer ? 1.0 : 2.0) / static_cast<double>(fan_in));
        Eigen::MatrixXd w(fan_out, fan_in);
        for (Eigen::Index r = 0; r < w.rows(); ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c)
                w(r, c) = scale * rng.next_normal();
        p.weights.push_back(std::move(w));
        p.biases.push_back(Eigen::VectorXd::Zero(fan_out));
        p.m_weights.push_back(Eigen::MatrixXd::Zero(fan_out, fan_in));
        p.v_weights.push_back(Eigen::MatrixXd::Zero(fan_out, fan_in));
        p.m_biases.push_back(Eigen::VectorXd::Zero(fan_out));
        p.v_biases.push_back(Eigen::VectorXd::Zero(fan_out));
    }
    return p;
}

namespace {

struct ForwardPass {
    std::vector<Eigen::MatrixXd> pre;  // pre-activation per layer
    std::vector<Eigen::MatrixXd> act;  // act[0] = input, act.back() = probs
};

ForwardPass run_forward(const ModelParams& params, const Eigen::MatrixXd& inputs) {
    ForwardPass fp;
    fp.act.push_back(inputs);
    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        Eigen::MatrixXd z =
            (params.weights[l] * fp.act.back()).colwise() + params.biases[l];
        if (l + 1 < params.weights.size()) {
            fp.act.push_back(z.cwiseMax(0.0));
        } else {
            fp.act.push_back((1.0 / (1.0 + (-z.array()).exp())).matrix());
        }
        fp.pre.push_back(std::move(z));
    }
    return fp;
}

} // namespace

Eigen::RowVectorXd forward_batch(const ModelParams& params, const Eigen::MatrixXd& inputs) {
    if (!inputs.allFinite())
        throw ContractError("forward pass requires finite inputs");
    return run_forward(params, inputs).act.back().row(0);
}

double forward(const ModelParams& params, const Eigen::VectorXd& scaled_features) {
    return forward_batch(params, scaled_features)(0);
}

double backward(const ModelParams& params, const Eigen::MatrixXd& inputs,
                const Eigen::RowVectorXd& labels, Gradients& grads) {
    if (inputs.cols() == 0)
        throw ContractError("backward pass requires a nonempty batch");
    const auto batch = static_cast<double>(inputs.cols());
    const ForwardPass fp = run_forward(params, inputs);

    const Eigen::ArrayXd p = fp.act.back().row(0).transpose().array().max(kProbFloor).min(
        1.0 - kProbFloor);
    const Eigen::ArrayXd y = labels.transpose().array();
    const double loss = -(y * p.log() + (1.0 - y) * (1.0 - p).log()).mean();
    if (!std::isfinite(loss))
        throw ContractError("training loss is not finite");

    grads.weights.assign(params.weights.size(), {});
    grads.biases.assign(params.biases.size(), {});

    // sigmoid + BCE collapse to (p - y) / batch at the output pre-activation
    Eigen::MatrixXd delta = ((p - y) / batch).transpose();
    for (std::size_t l = params.weights.size(); l-- > 0;) {
        grads.weights[l] = delta * fp.act[l].transpose();
        grads.biases[l] = delta.rowwise().sum();
        if (l > 0) {
            delta = (params.weights[l].transpose() * delta)
                        .cwiseProduct((fp.pre[l - 1].array() > 0.0).cast<double>().matrix());
        }
    }
    return loss;
}

void adam_step(ModelParams& params, const Gradients& grads, const TrainConfig& config) {
    ++params.step;
    const double t = static_cast<double>(params.step);
    const double corr1 = 1.0 - std::pow(config.beta1, t);
    const double corr2 = 1.0 - std::pow(config.beta2, t);

    auto update = [&](auto& value, auto& m, auto& v, const auto& g) {
        m = config.beta1 * m + (1.0 - config.beta1) * g;
        v = config.beta2 * v + (1.0 - config.beta2) * g.cwiseProduct(g);
        const auto m_hat = m / corr1;
        const auto v_hat = v / corr2;
        value -= config.learning_rate *
                 (m_hat.array() / (v_hat.array().sqrt() + config.epsilon)).matrix();
        if (!value.allFinite())
            throw ContractError("parameters became non-finite during the optimizer step");
    };

    for (std::size_t l = 0; l < params.weights.size(); ++l) {
        update(params.weights[l], params.m_weights[l], params.v_weights[l], grads.weights[l]);
        update(params.biases[l], params.m_biases[l], params.v_biases[l], grads.biases[l]);
    }
}

TrainResult train(const std::vector<DatasetRecord>& records, const NetworkConfig& network,
                  const TrainConfig& config) {
    network.validate();
    if (config.epochs < 1)
        throw ContractError("epochs must be >= 1");
    if (config.batch_size < 1 || config.batch_size > static_cast<int>(records.size()))
        throw ContractError("batch_size must be in [1, training-set size]");

    const Eigen::RowVectorXd labels = records_to_labels(records);
    require_two_classes(labels);

    const Eigen::MatrixXd columns = records_to_columns(records);
    TrainResult result;
    result.network = network;
    result.scaler = Scaler::fit(columns.transpose());
    const Eigen::MatrixXd scaled = result.scaler.apply_columns(columns);
    result.params = init_params(network);

    Rng shuffler(config.shuffle_seed);
    std::vector<Eigen::Index> order(records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        order[i] = static_cast<Eigen::Index>(i);

    const auto n = static_cast<Eigen::Index>(records.size());
    Gradients grads;
    for (int epoch = 0; epoch < config.epochs; ++epoch) {
        shuffler.shuffle(order);
        double loss_sum = 0.0;
        for (Eigen::Index begin = 0; begin < n; begin += config.batch_size) {
            const Eigen::Index size = std::min<Eigen::Index>(config.batch_size, n - begin);
            Eigen::MatrixXd batch(FeatureVector::kCount, size);
            Eigen::RowVectorXd batch_y(size);
            for (Eigen::Index k = 0; k < size; ++k) {
                batch.col(k) = scaled.col(order[static_cast<std::size_t>(begin + k)]);
                batch_y[k] = labels[order[static_cast<std::size_t>(begin + k)]];
            }
            const double loss = backward(result.params, batch, batch_y, grads);
            adam_step(result.params, grads, config);
            loss_sum += loss * static_cast<double>(size);
        }

        const Eigen::RowVectorXd probs = forward_batch(result.params, scaled);
        long correct = 0;
        for (Eigen::Index i = 0; i < n; ++i)
            correct += (probs[i] >= 0.5 ? 1.0 : 0.0) == labels[i] ? 1 : 0;
        result.history.push_back({epoch + 1, loss_sum / static_cast<double>(n),
                                  static_cast<double>(correct) / static_cast<double>(n)});
    }
    return result;
}

GridResult grid_search(const std::vector<DatasetRecord>& records,
                       const std::vector<int>& batch_sizes, const std::vector<int>& epoch_counts,
                       const NetworkConfig& network, const TrainConfig& base_config, int folds,
                       std::uint64_t fold_seed) {
    if (batch_sizes.empty() || epoch_counts.empty())
        throw ContractError("grid_search requires nonempty batch-size and epoch grids");
    if (folds < 2)
        throw ContractError("grid_search requires at least 2 folds");

    // stratified fold assignment, fixed across all cells
    std::vector<std::size_t> by_class[2];
    for (std::size_t i = 0; i < records.size(); ++i) {
        if (!records[i].suitability)
            throw ContractError("record '" + records[i].book_name + "' has no label");
        by_class[*records[i].suitability].push_back(i);
    }
    Rng rng(fold_seed);
    std::vector<int> fold_of(records.size(), 0);
    for (auto& members : by_class) {
        rng.shuffle(members);
        for (std::size_t k = 0; k < members.size(); ++k)
            fold_of[members[k]] = static_cast<int>(k % static_cast<std::size_t>(folds));
    }

    GridResult result;
    for (const int batch_size : batch_sizes) {
        for (const int epochs : epoch_counts) {
            GridCell cell;
            cell.batch_size = batch_size;
            cell.epochs = epochs;
            std::vector<double> fold_acc;
            try {
                for (int f = 0; f < folds; ++f) {
                    std::vector<DatasetRecord> fit_rows;
                    std::vector<DatasetRecord> val_rows;
                    for (std::size_t i = 0; i < records.size(); ++i)
                        (fold_of[i] == f ? val_rows : fit_rows).push_back(records[i]);
                    TrainConfig tc = base_config;
                    tc.batch_size = std::min<int>(batch_size, static_cast<int>(fit_rows.size()));
                    tc.epochs = epochs;
                    tc.shuffle_seed = base_config.shuffle_seed + static_cast<std::uint64_t>(f);
                    const TrainResult fit = train(fit_rows, network, tc);

                    long correct = 0;
                    for (const DatasetRecord& rec : val_rows) {
                        const double prob =
                            forward(fit.params, fit.scaler.apply(rec.features.to_vector()));
                        correct += (prob >= 0.5 ? 1 : 0) == *rec.suitability ? 1 : 0;
                    }
                    fold_acc.push_back(static_cast<double>(correct) /
                                       static_cast<double>(val_rows.size()));
                }
                double mean = 0.0;
                for (const double a : fold_acc)
                    mean += a;
                mean /= static_cast<double>(fold_acc.size());
                double var = 0.0;
                for (const double a : fold_acc)
                    var += (a - mean) * (a - mean);
                cell.mean_accuracy = mean;
                cell.sd_accuracy = std::sqrt(var / static_cast<double>(fold_acc.size()));
            } catch (const std::exception& err) {
                cell.failed = true;
                cell.error = err.what();
            }
            result.cells.push_back(std::move(cell));
        }
    }

    std::stable_sort(result.cells.begin(), result.cells.end(),
                     [](const GridCell& a, const GridCell& b) {
                         if (a.failed != b.failed)
                             return !a.failed;
                         if (a.mean_accuracy != b.mean_accuracy)
                             return a.mean_accuracy > b.mean_accuracy;
                         if (a.batch_size != b.batch_size)
                             return a.batch_size < b.batch_size;
                         return a.epochs < b.epochs;
                     });
    result.best = result.cells.front();
    return result;
}

double Model::predict(const Vector14& raw_features) const {
    return forward(params, scaler.apply(raw_features));
}

namespace {

using nlohmann::json;

json matrix_to_json(const Eigen::MatrixXd& m) {
    json rows = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c));
        rows.push_back(std::move(row));
    }
    return rows;
}

Eigen::MatrixXd matrix_from_json(const json& rows) {
    const auto r = static_cast<Eigen::Index>(rows.size());
    const auto c = r > 0 ? static_cast<Eigen::Index>(rows.at(0).size()) : 0;
    Eigen::MatrixXd m(r, c);
    for (Eigen::Index i = 0; i < r; ++i)
        for (Eigen::Index j = 0; j < c; ++j)
            m(i, j) = rows.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(j));
    return m;
}

json vector_to_json(const Eigen::VectorXd& v) {
    json arr = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i)
        arr.push_back(v[i]);
    return arr;
}

Eigen::VectorXd vector_from_json(const json& arr) {
    Eigen::VectorXd v(static_cast<Eigen::Index>(arr.size()));
    for (Eigen::Index i = 0; i < v.size(); ++i)
        v[i] = arr.at(static_cast<std::size_t>(i));
    return v;
}

constexpr int kModelFormatVersion = 1;

} // namespace

void save_model(const Model& model, const std::filesystem::path& path) {
    json doc;
    doc["format"] = "booksuit-model";
    doc["version"] = kModelFormatVersion;
    doc["network"] = {{"hidden1", model.network.hidden1},
                      {"hidden2", model.network.hidden2},
                      {"seed", model.network.seed}};
    json layers = json::array();
    for (std::size_t l = 0; l < model.params.weights.size(); ++l)
        layers.push_back({{"weights", matrix_to_json(model.params.weights[l])},
                          {"biases", vector_to_json(model.params.biases[l])}});
    doc["layers"] = std::move(layers);
    doc["scaler"] = {{"mean", vector_to_json(model.scaler.mean)},
                     {"stddev", vector_to_json(model.scaler.stddev)},
                     {"zero_variance_features", model.scaler.zero_variance_features}};

    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw ResourceError("cannot write model file: " + path.string());
    out << doc.dump(2) << '\n';
    if (!out)
        throw ResourceError("model write failed: " + path.string());
}

Model load_model(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ResourceError("cannot open model file: " + path.string());
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& err) {
        throw ParseError("corrupt model file " + path.string() + ": " + err.what());
    }
    try {
        if (doc.at("format") != "booksuit-model")
            throw ParseError("not a model file: " + path.string());
        if (doc.at("version") != kModelFormatVersion)
            throw ParseError("unsupported model version in " + path.string());
        Model model;
        model.network.hidden1 = doc.at("network").at("hidden1");
        model.network.hidden2 = doc.at("network").at("hidden2");
        model.network.seed = doc.at("network").at("seed");
        for (const json& layer : doc.at("layers")) {
            model.params.weights.push_back(matrix_from_json(layer.at("weights")));
            model.params.biases.push_back(vector_from_json(layer.at("biases")));
            const auto& w = model.params.weights.back();
            model.params.m_weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
            model.params.v_weights.push_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
            model.params.m_biases.push_back(Eigen::VectorXd::Zero(w.rows()));
            model.params.v_biases.push_back(Eigen::VectorXd::Zero(w.rows()));
        }
        model.scaler.mean = vector_from_json(doc.at("scaler").at("mean"));
        model.scaler.stddev = vector_from_json(doc.at("scaler").at("stddev"));
        model.scaler.zero_variance_features =
            doc.at("scaler").at("zero_variance_features").get<std::vector<int>>();

        if (model.params.weights.size() != 3 || model.params.weights.front().cols() != 14 ||
            model.params.weights.back().rows() != 1 || model.scaler.mean.size() != 14)
            throw ParseError("model file has inconsistent shapes: " + path.string());
        return model;
    } catch (const json::exception& err) {
        throw ParseError("malformed model file " + path.string() + ": " + err.what());
    }
}

} // namespace booksuit
