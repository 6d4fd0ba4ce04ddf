#pragma once

#include "huffcensus/asymptotics.hpp"
#include "huffcensus/counting.hpp"
#include "huffcensus/genfun.hpp"
#include "huffcensus/interval.hpp"
#include "huffcensus/rational.hpp"
#include "huffcensus/representations.hpp"
#include "huffcensus/serialize.hpp"
