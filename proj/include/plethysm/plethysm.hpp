#pragma once

#include "plethysm/checked.hpp"
#include "plethysm/hwv.hpp"
#include "plethysm/io.hpp"
#include "plethysm/lincomb.hpp"
#include "plethysm/linalg.hpp"
#include "plethysm/parallel.hpp"
#include "plethysm/partitions.hpp"
#include "plethysm/plethystic.hpp"
#include "plethysm/polytabloid.hpp"
#include "plethysm/symfunc.hpp"
#include "plethysm/tableaux.hpp"
#include "plethysm/theorems.hpp"
