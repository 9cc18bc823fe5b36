#include <doctest.h>

#include <cmath>
#include <fstream>

#include <json.hpp>

#include "booksuit/ann.hpp"
#include "booksuit/errors.hpp"
#include "booksuit/rng.hpp"
#include "support.hpp"

using namespace booksuit;

namespace {

DatasetRecord record_with(const Vector14& v, int label, int index) {
    DatasetRecord rec;
    rec.book_name = "r" + std::to_string(index);
    rec.features = FeatureVector::from_vector(v);
    rec.suitability = label;
    return rec;
}

// Labeled set where the last feature alone separates the classes.
std::vector<DatasetRecord> separable_records(int per_class, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<DatasetRecord> records;
    for (int i = 0; i < 2 * per_class; ++i) {
        const int label = i < per_class ? 0 : 1;
        Vector14 v;
        for (int k = 0; k < 14; ++k)
            v[k] = rng.next_normal();
        v[13] = label == 1 ? 60.0 + 30.0 * rng.next_double() : 5.0 + 15.0 * rng.next_double();
        records.push_back(record_with(v, label, i));
    }
    return records;
}

} // namespace

TEST_CASE("init_params: shapes and seed determinism") {
    NetworkConfig cfg;
    cfg.hidden1 = 32;
    cfg.hidden2 = 16;
    cfg.seed = 7;
    const ModelParams a = init_params(cfg);
    REQUIRE(a.weights.size() == 3);
    CHECK(a.weights[0].rows() == 32);
    CHECK(a.weights[0].cols() == 14);
    CHECK(a.weights[1].rows() == 16);
    CHECK(a.weights[1].cols() == 32);
    CHECK(a.weights[2].rows() == 1);
    CHECK(a.weights[2].cols() == 16);
    for (const auto& b : a.biases)
        CHECK(b.isZero());

    const ModelParams b = init_params(cfg);
    for (int l = 0; l < 3; ++l)
        CHECK(a.weights[l] == b.weights[l]);

    cfg.seed = 8;
    const ModelParams c = init_params(cfg);
    CHECK(a.weights[0] != c.weights[0]);

    cfg.hidden1 = 0;
    CHECK_THROWS_AS(init_params(cfg), ContractError);
}

TEST_CASE("forward: zero parameters give probability one half") {
    NetworkConfig cfg;
    ModelParams params = init_params(cfg);
    for (auto& w : params.weights)
        w.setZero();
    CHECK(forward(params, Eigen::VectorXd::Random(14)) == 0.5);

    Eigen::VectorXd bad = Eigen::VectorXd::Zero(14);
    bad[3] = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(forward(params, bad), ContractError);
}

TEST_CASE("forward: nonnegative single path is monotone in its input") {
    NetworkConfig cfg;
    cfg.hidden1 = 2;
    cfg.hidden2 = 2;
    ModelParams params = init_params(cfg);
    for (auto& w : params.weights)
        w.setZero();
    params.weights[0](0, 5) = 0.7;
    params.weights[1](0, 0) = 0.9;
    params.weights[2](0, 0) = 1.1;

    double previous = -1.0;
    for (double x = -3.0; x <= 3.0; x += 0.25) {
        Eigen::VectorXd input = Eigen::VectorXd::Zero(14);
        input[5] = x;
        const double p = forward(params, input);
        CHECK(p >= previous);
        CHECK(p > 0.0);
        CHECK(p < 1.0);
        previous = p;
    }
}

TEST_CASE("forward matches the committed matrix-arithmetic fixture") {
    std::ifstream in(testsupport::fixtures_dir() / "ann_forward_fixture.json");
    REQUIRE(in.is_open());
    nlohmann::json doc;
    in >> doc;

    ModelParams params;
    for (const auto& layer : doc.at("layers")) {
        const auto& wj = layer.at("weights");
        Eigen::MatrixXd w(wj.size(), wj.at(0).size());
        for (Eigen::Index r = 0; r < w.rows(); ++r)
            for (Eigen::Index c = 0; c < w.cols(); ++c)
                w(r, c) = wj.at(r).at(c).get<double>();
        Eigen::VectorXd b(layer.at("biases").size());
        for (Eigen::Index k = 0; k < b.size(); ++k)
            b[k] = layer.at("biases").at(k).get<double>();
        params.weights.push_back(w);
        params.biases.push_back(b);
    }
    Eigen::VectorXd x(14);
    for (Eigen::Index k = 0; k < 14; ++k)
        x[k] = doc.at("input").at(k).get<double>();

    const double expected = doc.at("expected_probability").get<double>();
    CHECK(std::fabs(forward(params, x) - expected) < 1e-12);
}

TEST_CASE("backward: analytic gradients match central finite differences") {
    Rng rng(1729);
    TrainConfig tc;
    const double fd_step = 1e-5;
    double worst = 0.0;
    for (int trial = 0; trial < 20; ++trial) {
        NetworkConfig cfg;
        cfg.hidden1 = 2 + static_cast<int>(rng.next_index(4));
        cfg.hidden2 = 2 + static_cast<int>(rng.next_index(3));
        cfg.seed = 1000 + static_cast<std::uint64_t>(trial);
        ModelParams params = init_params(cfg);
        // zero biases put some pre-activations exactly on the rectifier
        // kink, where one-sided finite differences disagree with any valid
        // subgradient; nudge them off it
        for (auto& b : params.biases)
            for (Eigen::Index k = 0; k < b.size(); ++k)
                b[k] = 0.05 * rng.next_normal();

        Eigen::MatrixXd batch(14, 4);
        Eigen::RowVectorXd labels(4);
        for (Eigen::Index c = 0; c < 4; ++c) {
            for (Eigen::Index r = 0; r < 14; ++r)
                batch(r, c) = rng.next_normal();
            labels[c] = static_cast<double>(rng.next_index(2));
        }

        Gradients grads;
        backward(params, batch, labels, grads);

        auto loss_at = [&]() {
            Gradients scratch;
            return backward(params, batch, labels, scratch);
        };
        for (std::size_t l = 0; l < params.weights.size(); ++l) {
            for (int probe = 0; probe < 6; ++probe) {
                const auto r = static_cast<Eigen::Index>(
                    rng.next_index(static_cast<std::uint64_t>(params.weights[l].rows())));
                const auto c = static_cast<Eigen::Index>(
                    rng.next_index(static_cast<std::uint64_t>(params.weights[l].cols())));
                const double saved = params.weights[l](r, c);
                params.weights[l](r, c) = saved + fd_step;
                const double up = loss_at();
                params.weights[l](r, c) = saved - fd_step;
                const double down = loss_at();
                params.weights[l](r, c) = saved;
                const double fd = (up - down) / (2.0 * fd_step);
                const double analytic = grads.weights[l](r, c);
                const double scale = std::max({std::fabs(fd), std::fabs(analytic), 1e-4});
                worst = std::max(worst, std::fabs(fd - analytic) / scale);
            }
            const double saved = params.biases[l][0];
            params.biases[l][0] = saved + fd_step;
            const double up = loss_at();
            params.biases[l][0] = saved - fd_step;
            const double down = loss_at();
            params.biases[l][0] = saved;
            const double fd = (up - down) / (2.0 * fd_step);
            const double analytic = grads.biases[l][0];
            const double scale = std::max({std::fabs(fd), std::fabs(analytic), 1e-4});
            worst = std::max(worst, std::fabs(fd - analytic) / scale);
        }
    }
    CHECK(worst <= 1e-4);
}

TEST_CASE("adam_step: zero gradients leave parameters, bump the counter") {
    NetworkConfig cfg;
    ModelParams params = init_params(cfg);
    const Eigen::MatrixXd w0 = params.weights[0];
    Gradients zero;
    for (const auto& w : params.weights) {
        zero.weights.emplace_back(Eigen::MatrixXd::Zero(w.rows(), w.cols()));
        zero.biases.emplace_back(Eigen::VectorXd::Zero(w.rows()));
    }
    adam_step(params, zero, TrainConfig{});
    CHECK(params.step == 1);
    CHECK(params.weights[0] == w0);
}

TEST_CASE("adam_step: overfits a single sample") {
    NetworkConfig cfg;
    cfg.hidden1 = 8;
    cfg.hidden2 = 4;
    cfg.seed = 3;
    ModelParams params = init_params(cfg);
    Eigen::MatrixXd x(14, 1);
    for (int k = 0; k < 14; ++k)
        x(k, 0) = 0.1 * (k + 1);
    Eigen::RowVectorXd y(1);
    y[0] = 1.0;
    TrainConfig tc;
    tc.learning_rate = 1e-2;
    Gradients grads;
    for (int step = 0; step < 200; ++step) {
        backward(params, x, y, grads);
        adam_step(params, grads, tc);
    }
    CHECK(forward_batch(params, x)(0) > 0.99);
}

TEST_CASE("adam_step: learning rate near zero keeps parameters near init") {
    NetworkConfig cfg;
    cfg.seed = 5;
    ModelParams params = init_params(cfg);
    const ModelParams initial = init_params(cfg);
    TrainConfig tc;
    tc.learning_rate = 1e-9;
    Rng rng(12);
    Eigen::MatrixXd x(14, 4);
    Eigen::RowVectorXd y(4);
    for (Eigen::Index c = 0; c < 4; ++c) {
        for (Eigen::Index r = 0; r < 14; ++r)
            x(r, c) = rng.next_normal();
        y[c] = static_cast<double>(rng.next_index(2));
    }
    Gradients grads;
    for (int step = 0; step < 10; ++step) {
        backward(params, x, y, grads);
        adam_step(params, grads, tc);
    }
    double max_delta = 0.0;
    for (std::size_t l = 0; l < params.weights.size(); ++l)
        max_delta = std::max(
            max_delta, (params.weights[l] - initial.weights[l]).cwiseAbs().maxCoeff());
    CHECK(max_delta < 1e-6);
}

TEST_CASE("train: separable data reaches full accuracy and is deterministic") {
    const auto records = separable_records(20, 90);
    NetworkConfig cfg;
    cfg.hidden1 = 8;
    cfg.hidden2 = 4;
    TrainConfig tc;
    tc.epochs = 50;
    tc.batch_size = 8;
    tc.learning_rate = 1e-2;
    const TrainResult a = train(records, cfg, tc);
    CHECK(a.history.size() == 50);
    CHECK(a.history.back().accuracy == 1.0);
    for (const auto& epoch : a.history)
        CHECK(std::isfinite(epoch.loss));

    const TrainResult b = train(records, cfg, tc);
    for (std::size_t i = 0; i < a.history.size(); ++i) {
        CHECK(a.history[i].loss == b.history[i].loss);
        CHECK(a.history[i].accuracy == b.history[i].accuracy);
    }
}

TEST_CASE("train: refusals") {
    NetworkConfig cfg;
    TrainConfig tc;
    std::vector<DatasetRecord> one_class;
    for (int i = 0; i < 8; ++i)
        one_class.push_back(record_with(Vector14::Constant(static_cast<double>(i)), 1, i));
    CHECK_THROWS_AS(train(one_class, cfg, tc), ContractError);

    auto records = separable_records(4, 2);
    tc.batch_size = 100;
    CHECK_THROWS_AS(train(records, cfg, tc), ContractError);
    tc.batch_size = 4;
    tc.epochs = 0;
    CHECK_THROWS_AS(train(records, cfg, tc), ContractError);

    records[0].suitability.reset();
    tc.epochs = 1;
    CHECK_THROWS_AS(train(records, cfg, tc), ContractError);
}

TEST_CASE("scaler: statistics come from the fitted rows only") {
    Eigen::MatrixXd train_rows(4, 14);
    train_rows.setZero();
    train_rows.col(0) << 1, 2, 3, 4;
    const Scaler fitted = Scaler::fit(train_rows);
    CHECK(fitted.mean[0] == doctest::Approx(2.5));

    Eigen::MatrixXd leaky(6, 14);
    leaky.setZero();
    leaky.col(0) << 1, 2, 3, 4, 100, 200;
    const Scaler refitted = Scaler::fit(leaky);
    CHECK(refitted.mean[0] != fitted.mean[0]); // adding rows must move the stats

    // zero-variance features scale by 1 and are reported
    CHECK(fitted.stddev[5] == 1.0);
    CHECK_FALSE(fitted.zero_variance_features.empty());

    Eigen::VectorXd x = Eigen::VectorXd::Zero(14);
    x[0] = 2.5;
    CHECK(fitted.apply(x)[0] == doctest::Approx(0.0));
}

TEST_CASE("grid_search: cardinality, determinism, degenerate grid") {
    const auto records = separable_records(15, 31);
    NetworkConfig cfg;
    cfg.hidden1 = 4;
    cfg.hidden2 = 2;
    TrainConfig tc;
    tc.epochs = 10;

    const GridResult grid = grid_search(records, {4, 8}, {5, 10}, cfg, tc, 5, 17);
    CHECK(grid.cells.size() == 4);
    for (const auto& cell : grid.cells) {
        CHECK_FALSE(cell.failed);
        CHECK(cell.mean_accuracy >= 0.0);
        CHECK(cell.mean_accuracy <= 1.0);
        CHECK(cell.sd_accuracy >= 0.0);
    }
    // sorted by mean accuracy, best first
    for (std::size_t i = 1; i < grid.cells.size(); ++i)
        CHECK(grid.cells[i - 1].mean_accuracy >= grid.cells[i].mean_accuracy);

    const GridResult again = grid_search(records, {4, 8}, {5, 10}, cfg, tc, 5, 17);
    for (std::size_t i = 0; i < grid.cells.size(); ++i) {
        CHECK(grid.cells[i].batch_size == again.cells[i].batch_size);
        CHECK(grid.cells[i].epochs == again.cells[i].epochs);
        CHECK(grid.cells[i].mean_accuracy == again.cells[i].mean_accuracy);
    }

    const GridResult single = grid_search(records, {4}, {5}, cfg, tc, 5, 17);
    CHECK(single.cells.size() == 1);
    CHECK(single.best.batch_size == 4);
    CHECK(single.best.epochs == 5);

    CHECK_THROWS_AS(grid_search(records, {}, {5}, cfg, tc), ContractError);
}

TEST_CASE("model persistence: save/load round trip is prediction-exact") {
    const auto records = separable_records(10, 77);
    NetworkConfig cfg;
    cfg.hidden1 = 6;
    cfg.hidden2 = 3;
    TrainConfig tc;
    tc.epochs = 15;
    tc.batch_size = 5;
    const TrainResult fit = train(records, cfg, tc);
    const Model model{fit.network, fit.params, fit.scaler};

    const auto dir = testsupport::temp_dir("model-roundtrip");
    save_model(model, dir / "model.json");
    const Model loaded = load_model(dir / "model.json");

    Rng rng(31337);
    for (int trial = 0; trial < 100; ++trial) {
        Vector14 raw;
        for (int k = 0; k < 14; ++k)
            raw[k] = rng.next_normal() * std::pow(10.0, static_cast<double>(k % 5));
        CHECK(model.predict(raw) == loaded.predict(raw)); // bit-for-bit
    }

    // the scaler travels with the model: raw features score like scaled ones
    const Vector14 raw = records[3].features.to_vector();
    CHECK(loaded.predict(raw) ==
          forward(fit.params, fit.scaler.apply(raw)));
}

TEST_CASE("persistence purity: data changes results, re-serialization never does") {
    const auto records = separable_records(10, 5);
    NetworkConfig cfg;
    cfg.hidden1 = 6;
    cfg.hidden2 = 3;
    TrainConfig tc;
    tc.epochs = 10;
    tc.batch_size = 5;

    const TrainResult base = train(records, cfg, tc);
    auto duplicated = records;
    duplicated.push_back(records[0]);
    const TrainResult altered = train(duplicated, cfg, tc);
    CHECK(base.params.weights[0] != altered.params.weights[0]);

    const Model model{base.network, base.params, base.scaler};
    const auto dir = testsupport::temp_dir("model-purity");
    save_model(model, dir / "once.json");
    const Model loaded = load_model(dir / "once.json");
    save_model(loaded, dir / "twice.json");
    const Model reloaded = load_model(dir / "twice.json");
    Rng rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        Vector14 raw;
        for (int k = 0; k < 14; ++k)
            raw[k] = rng.next_normal();
        CHECK(model.predict(raw) == reloaded.predict(raw));
    }
}

TEST_CASE("model persistence: corrupt and truncated files") {
    const auto dir = testsupport::temp_dir("model-corrupt");
    CHECK_THROWS_AS(load_model(dir / "absent.json"), ResourceError);

    testsupport::spit(dir / "trunc.json", "{\"format\": \"booksuit-model\", \"ver");
    CHECK_THROWS_AS(load_model(dir / "trunc.json"), ParseError);

    testsupport::spit(dir / "other.json", "{\"format\": \"something-else\", \"version\": 1}");
    CHECK_THROWS_AS(load_model(dir / "other.json"), ParseError);
}
