// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "ccm/kernels.hpp"

namespace ccm::kernels::detail {

#if defined(CCM_HAVE_AVX2)
const KernelTable &avx2_table_unchecked() noexcept;
#endif

} // namespace ccm::kernels::detail
