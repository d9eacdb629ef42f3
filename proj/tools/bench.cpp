#include <chrono>
#include <cstdio>

#include "qmock/mocklib.hpp"
#include "qmock/theta.hpp"

using namespace qmock;

namespace {

template <class F>
double timed(F&& f, int reps = 3) {
    double best = 1e30;
    for (int i = 0; i < reps; ++i) {
        auto t0 = std::chrono::steady_clock::now();
        f();
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (dt < best) best = dt;
    }
    return best;
}

}  // namespace

int main() {
    // dense series product: parallel kernel vs serial reference
    for (long long T : {200, 400, 800}) {
        LaurentSeries a = jtheta_general(Monomial(-1, 1, 1), 1, T);
        LaurentSeries b = jtheta_general(Monomial::q_power(2), 3, T);
        volatile long long sink = 0;
        double tp = timed([&] {
            LaurentSeries c = mul(a, b);
            sink += c.stored_end();
        });
        double ts = timed([&] {
            LaurentSeries c = mul_serial(a, b);
            sink += c.stored_end();
        });
        std::printf("mul order %4lld: parallel %8.4fs  serial %8.4fs  speedup %.2fx\n", T,
                    tp, ts, ts / tp);
    }

    // full registry sweep at the default specializations
    double tr = timed(
        [&] {
            for (const IdentityEntry& e : registry())
                for (const Specialization& s : e.default_specs) {
                    try {
                        check_identity(e, s, 30);
                    } catch (const QmockError&) {
                    }
                }
        },
        1);
    std::printf("registry sweep (order 30): %.2fs\n", tr);
    return 0;
}
