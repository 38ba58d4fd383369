#pragma once

#include "boxball/core.hpp"
#include "boxball/bbs.hpp"
#include "boxball/rs.hpp"
#include "boxball/knuth.hpp"
#include "boxball/involutions.hpp"
#include "boxball/patterns.hpp"
#include "boxball/enumerate.hpp"
#include "boxball/io.hpp"
#include "boxball/lab.hpp"
