#pragma once

#include "arrangement.hpp"
#include "crapo.hpp"
#include "egf.hpp"
#include "flats.hpp"
#include "group.hpp"
#include "localized.hpp"
#include "naive.hpp"
#include "poly.hpp"
#include "rank2.hpp"
#include "recurrence.hpp"
#include "serialize.hpp"
#include "series.hpp"
