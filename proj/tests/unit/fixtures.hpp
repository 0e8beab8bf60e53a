#pragma once

#include "antiassoc/corpus.hpp"

namespace fixtures {

inline const antiassoc::Corpus& corpus()
{
    static const antiassoc::Corpus c = antiassoc::load_corpus(ANTIASSOC_TEST_CORPUS);
    return c;
}

inline antiassoc::ExactTensor tensor(const std::string& id, const antiassoc::ParamValues& p = {})
{
    return corpus().at(id).algebra.at(p);
}

inline antiassoc::AlgebraSC zero_algebra(int n)
{
    return antiassoc::AlgebraSC("zero", n);
}

}
