// SPDX-License-Identifier: MIT
//
// hgmimo - near-field line-of-sight MIMO on Hermite-Gaussian beam modes
// Copyright (c) 2026 hgmimo contributors

#ifndef HGMIMO_HGMIMO_HPP
#define HGMIMO_HGMIMO_HPP

#include "hgmimo/beam.hpp"
#include "hgmimo/channel.hpp"
#include "hgmimo/config.hpp"
#include "hgmimo/filters.hpp"
#include "hgmimo/geometry.hpp"
#include "hgmimo/hermite.hpp"
#include "hgmimo/io.hpp"
#include "hgmimo/linkmetrics.hpp"
#include "hgmimo/pattern.hpp"
#include "hgmimo/quadrature.hpp"
#include "hgmimo/scenario.hpp"
#include "hgmimo/txrx.hpp"
#include "hgmimo/units.hpp"

#endif // HGMIMO_HGMIMO_HPP
