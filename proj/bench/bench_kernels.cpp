// Batched/OpenMP kernels against the serial reference loops.
#include <benchmark/benchmark.h>

#include <random>

#include "apinn/autodiff.hpp"
#include "apinn/loss.hpp"
#include "apinn/network.hpp"

using namespace apinn;
using Eigen::MatrixXd;

namespace {

MatrixXd points(Eigen::Index n) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    MatrixXd p(2, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        p(0, j) = u(rng);
        p(1, j) = 0.5 * (u(rng) + 1.0);
    }
    return p;
}

const Network& net() {
    static const Network n = Network::init({2, 4, 64, 1}, 7);
    return n;
}

void BM_jets_batched(benchmark::State& st) {
    const MatrixXd p = points(st.range(0));
    const JetRequest req = JetRequest::pde_residual(2);
    for (auto _ : st) benchmark::DoNotOptimize(eval_jets(net(), p, req));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_jets_serial(benchmark::State& st) {
    const MatrixXd p = points(st.range(0));
    const JetRequest req = JetRequest::pde_residual(2);
    for (auto _ : st) benchmark::DoNotOptimize(serial::eval_jets(net(), p, req));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_grad_batched(benchmark::State& st) {
    const MatrixXd p = points(st.range(0));
    const JetRequest req = JetRequest::pde_residual(2);
    const JetLoss linear = [](Eigen::Index, const JetBatch& jets, MatrixXd& seeds) {
        seeds.setOnes();
        return jets.data.sum();
    };
    Eigen::VectorXd g(net().parameters().size());
    for (auto _ : st) {
        g.setZero();
        benchmark::DoNotOptimize(accumulate_loss_grad(net(), p, req, linear, g));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_grad_serial(benchmark::State& st) {
    const MatrixXd p = points(st.range(0));
    const JetRequest req = JetRequest::pde_residual(2);
    const MatrixXd seeds = MatrixXd::Ones(1, req.channels() * p.cols());
    for (auto _ : st) benchmark::DoNotOptimize(serial::seeded_param_grad(net(), p, req, seeds));
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

void BM_residual_loss_grad(benchmark::State& st) {
    const MatrixXd p = points(st.range(0));
    const ProblemSpec spec = ProblemSpec::ac_cos();
    Eigen::VectorXd g(net().parameters().size());
    for (auto _ : st) {
        g.setZero();
        benchmark::DoNotOptimize(mse_f(net(), p, spec, &g));
    }
    st.SetItemsProcessed(st.iterations() * st.range(0));
}

}  // namespace

BENCHMARK(BM_jets_batched)->Arg(256)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_jets_serial)->Arg(256)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grad_batched)->Arg(256)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_grad_serial)->Arg(256)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_residual_loss_grad)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
