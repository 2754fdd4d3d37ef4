#ifndef WFSMC_KERNELS_HPP
#define WFSMC_KERNELS_HPP

#include "wfsmc/kernels/gibbs_truncated.hpp"
#include "wfsmc/kernels/kfold.hpp"
#include "wfsmc/kernels/latin_swap.hpp"
#include "wfsmc/kernels/mixture.hpp"
#include "wfsmc/kernels/rwm.hpp"

#endif
