#pragma once

#include "hmf/error.hpp"
#include "hmf/rational.hpp"
#include "hmf/poly.hpp"
#include "hmf/roots.hpp"
#include "hmf/enclosure.hpp"
#include "hmf/algebra.hpp"
#include "hmf/analysis.hpp"
#include "hmf/module.hpp"
#include "hmf/system.hpp"
#include "hmf/fourier.hpp"
#include "hmf/random.hpp"
#include "hmf/json_io.hpp"
#include "hmf/report.hpp"
#include "hmf/gallery.hpp"
