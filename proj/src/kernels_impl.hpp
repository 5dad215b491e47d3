#pragma once

#include "ratdyn/kernels.hpp"

namespace ratdyn::kernels::detail {

void horner_eval_scalar(const HornerBatch& batch, std::size_t begin, std::size_t end);
void attraction_time_scalar(const AttractionBatch& batch, std::size_t begin, std::size_t end);

#if defined(RATDYN_HAVE_AVX2_TU)
// Process [0, n4) where n4 is a multiple of 4; the dispatcher finishes the tail.
void horner_eval_avx2(const HornerBatch& batch, std::size_t n4);
void attraction_time_avx2(const AttractionBatch& batch, std::size_t n4);
#endif

}  // namespace ratdyn::kernels::detail
