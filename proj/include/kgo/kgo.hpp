#pragma once

#include "kgo/errors.hpp"
#include "kgo/heun_series.hpp"
#include "kgo/oracle.hpp"
#include "kgo/params.hpp"
#include "kgo/polynomial.hpp"
#include "kgo/quantization.hpp"
#include "kgo/wavefunction.hpp"
