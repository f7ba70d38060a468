#include "tfa/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace tfa {

namespace {

// FFTW plan creation is not thread-safe; execution on the plan's own
// buffers is. Each thread keeps its own plans and scratch buffers.
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}

struct PlanEntry {
    fftw_plan plan = nullptr;
    fftw_complex* buf = nullptr;
    int n = 0;

    PlanEntry() = default;
    PlanEntry(const PlanEntry&) = delete;
    PlanEntry& operator=(const PlanEntry&) = delete;
    PlanEntry(PlanEntry&& other) noexcept : plan(other.plan), buf(other.buf), n(other.n) {
        other.plan = nullptr;
        other.buf = nullptr;
    }
    ~PlanEntry() {
        if (plan != nullptr || buf != nullptr) {
            std::lock_guard<std::mutex> lock(planner_mutex());
            if (plan) fftw_destroy_plan(plan);
            if (buf) fftw_free(buf);
        }
    }
};

PlanEntry make_plan(int n, int sign) {
    PlanEntry e;
    e.n = n;
    std::lock_guard<std::mutex> lock(planner_mutex());
    e.buf = fftw_alloc_complex(static_cast<size_t>(n));
    if (!e.buf) throw std::bad_alloc();
    e.plan = fftw_plan_dft_1d(n, e.buf, e.buf, sign, FFTW_ESTIMATE);
    if (!e.plan) {
        fftw_free(e.buf);
        e.buf = nullptr;
        throw std::runtime_error("fftw plan creation failed for n=" + std::to_string(n));
    }
    return e;
}

void run_transform(cplx* data, int n, int sign) {
    if (n <= 0) throw std::invalid_argument("fft: length must be positive");
    thread_local std::unordered_map<long, PlanEntry> cache;
    long key = static_cast<long>(n) * 2 + (sign == FFTW_FORWARD ? 0 : 1);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make_plan(n, sign)).first;
    PlanEntry& e = it->second;
    auto* buf = reinterpret_cast<cplx*>(e.buf);
    std::copy(data, data + n, buf);
    fftw_execute(e.plan);
    std::copy(buf, buf + n, data);
}

}  // namespace

void fft_forward(cplx* data, int n) { run_transform(data, n, FFTW_FORWARD); }
void fft_inverse(cplx* data, int n) { run_transform(data, n, FFTW_BACKWARD); }

void fft_forward(std::vector<cplx>& v) { fft_forward(v.data(), static_cast<int>(v.size())); }
void fft_inverse(std::vector<cplx>& v) { fft_inverse(v.data(), static_cast<int>(v.size())); }

namespace {
template <typename Fn>
void transform_2d(Eigen::MatrixXcd& m, Fn&& fn) {
    const int rows = static_cast<int>(m.rows());
    const int cols = static_cast<int>(m.cols());
    std::vector<cplx> work(std::max(rows, cols));
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) work[c] = m(r, c);
        fn(work.data(), cols);
        for (int c = 0; c < cols; ++c) m(r, c) = work[c];
    }
    for (int c = 0; c < cols; ++c) {
        for (int r = 0; r < rows; ++r) work[r] = m(r, c);
        fn(work.data(), rows);
        for (int r = 0; r < rows; ++r) m(r, c) = work[r];
    }
}
}  // namespace

void fft2_forward(Eigen::MatrixXcd& m) {
    transform_2d(m, [](cplx* d, int n) { fft_forward(d, n); });
}
void fft2_inverse(Eigen::MatrixXcd& m) {
    transform_2d(m, [](cplx* d, int n) { fft_inverse(d, n); });
}

}  // namespace tfa
