#pragma once

#include "errors.hpp"
#include "partition.hpp"
#include "blocks.hpp"
#include "maps.hpp"
#include "bijections.hpp"
#include "census.hpp"
#include "serialize.hpp"
