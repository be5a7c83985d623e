#include <vector>

#include "doctest.h"
#include "test_util.hpp"
#include "ufact/batch.hpp"
#include "ufact/random.hpp"

using namespace ufact;

namespace {

bool bitwise_equal(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (std::size_t i = 0; i < a.data().size(); ++i)
        if (a.data()[i] != b.data()[i]) return false;
    return true;
}

}  // namespace

TEST_CASE("parallel and serial batch compose agree bit for bit") {
    const Scheme scheme{SchemeTag::Flag, 9, 0};
    const std::vector<ParamSet> sets = batch::random_param_sets(scheme, 64, 7);
    const std::vector<ComplexMatrix> par = batch::compose_many(sets);
    const std::vector<ComplexMatrix> ser = batch::compose_many_serial(sets);
    REQUIRE(par.size() == ser.size());
    for (std::size_t i = 0; i < par.size(); ++i) CHECK(bitwise_equal(par[i], ser[i]));

    const std::vector<double> rp = batch::unitarity_residuals(par);
    const std::vector<double> rs = batch::unitarity_residuals_serial(ser);
    for (std::size_t i = 0; i < rp.size(); ++i) {
        CHECK(rp[i] == rs[i]);
        CHECK(rp[i] <= 1e-12 * 9);
    }
}

TEST_CASE("batch draws are scheduling-independent") {
    const Scheme scheme{SchemeTag::FullUnitary, 5, 0};
    const std::vector<ParamSet> batch_sets = batch::random_param_sets(scheme, 16, 99);
    for (std::size_t i = 0; i < batch_sets.size(); ++i) {
        Rng rng(derive_seed(99, i));
        const ParamSet direct = random_param_set(scheme, rng);
        REQUIRE(batch_sets[i].vectors.size() == direct.vectors.size());
        for (std::size_t f = 0; f < direct.vectors.size(); ++f) {
            CHECK(batch_sets[i].vectors[f].angles == direct.vectors[f].angles);
            CHECK(batch_sets[i].vectors[f].phases == direct.vectors[f].phases);
        }
    }
}

TEST_CASE("different seeds give different draws") {
    const Scheme scheme{SchemeTag::Flag, 4, 0};
    const std::vector<ParamSet> a = batch::random_param_sets(scheme, 1, 1);
    const std::vector<ParamSet> b = batch::random_param_sets(scheme, 1, 2);
    CHECK(a[0].vectors[0].angles != b[0].vectors[0].angles);
}
