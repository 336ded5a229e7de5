#pragma once

// Pinned reference data for the order-171 construction (q = 13, n = 2):
// two parallel classes of the design based at w = (0,0), fixed once and
// compared byte-for-byte against what the library builds.  Points are
// "a:b" field-coordinate pairs, or inf1 / inf2.
//
//   kStarClass171  -- the star class (holds the block {inf1, inf2, w})
//   kFrameU1C1_171 -- the frame class for direction u1 = (1,0), a = 0,
//                     b = 0 (class index j = 1)

namespace lkts_test {

inline const char* const kStarClass171[57] = {
    "inf1,inf2,0:0", "1:0,4:0,5:0", "3:0,7:0,10:0", "2:0,6:0,11:0",
    "8:0,9:0,12:0", "0:1,0:4,0:5", "0:3,0:7,0:10", "0:2,0:6,0:11",
    "0:8,0:9,0:12", "1:1,4:4,5:5", "3:3,7:7,10:10", "2:2,6:6,11:11",
    "8:8,9:9,12:12", "2:1,8:4,10:5", "6:3,1:7,7:10", "4:2,12:6,9:11",
    "3:8,5:9,11:12", "3:1,12:4,2:5", "9:3,8:7,4:10", "6:2,5:6,7:11",
    "11:8,1:9,10:12", "4:1,3:4,7:5", "12:3,2:7,1:10", "8:2,11:6,5:11",
    "6:8,10:9,9:12", "5:1,7:4,12:5", "2:3,9:7,11:10", "10:2,4:6,3:11",
    "1:8,6:9,8:12", "6:1,11:4,4:5", "5:3,3:7,8:10", "12:2,10:6,1:11",
    "9:8,2:9,7:12", "7:1,2:4,9:5", "8:3,10:7,5:10", "1:2,3:6,12:11",
    "4:8,11:9,6:12", "8:1,6:4,1:5", "11:3,4:7,2:10", "3:2,9:6,10:11",
    "12:8,7:9,5:12", "9:1,10:4,6:5", "1:3,11:7,12:10", "5:2,2:6,8:11",
    "7:8,3:9,4:12", "10:1,1:4,11:5", "4:3,5:7,9:10", "7:2,8:6,6:11",
    "2:8,12:9,3:12", "11:1,5:4,3:5", "7:3,12:7,6:10", "9:2,1:6,4:11",
    "10:8,8:9,2:12", "12:1,9:4,8:5", "10:3,6:7,3:10", "11:2,7:6,2:11",
    "5:8,4:9,1:12",
};

inline const char* const kFrameU1C1_171[57] = {
    "inf1,1:0,6:0", "inf2,2:0,8:0", "0:0,10:0,12:0", "3:0,5:0,9:0",
    "4:0,7:0,11:0", "1:1,3:9,9:3", "12:12,10:4,4:10", "1:2,3:5,9:6",
    "12:11,10:8,4:7", "2:1,12:9,12:3", "11:12,1:4,1:10", "2:2,12:5,12:6",
    "11:11,1:8,1:7", "3:1,8:9,2:3", "10:12,5:4,11:10", "3:2,8:5,2:6",
    "10:11,5:8,11:7", "4:1,4:9,5:3", "9:12,9:4,8:10", "4:2,4:5,5:6",
    "9:11,9:8,8:7", "5:1,0:9,8:3", "8:12,0:4,5:10", "5:2,0:5,8:6",
    "8:11,0:8,5:7", "6:1,9:9,11:3", "7:12,4:4,2:10", "6:2,9:5,11:6",
    "7:11,4:8,2:7", "7:1,5:9,1:3", "6:12,8:4,12:10", "7:2,5:5,1:6",
    "6:11,8:8,12:7", "8:1,1:9,4:3", "5:12,12:4,9:10", "8:2,1:5,4:6",
    "5:11,12:8,9:7", "9:1,10:9,7:3", "4:12,3:4,6:10", "9:2,10:5,7:6",
    "4:11,3:8,6:7", "10:1,6:9,10:3", "3:12,7:4,3:10", "10:2,6:5,10:6",
    "3:11,7:8,3:7", "11:1,2:9,0:3", "2:12,11:4,0:10", "11:2,2:5,0:6",
    "2:11,11:8,0:7", "12:1,11:9,3:3", "1:12,2:4,10:10", "12:2,11:5,3:6",
    "1:11,2:8,10:7", "0:1,7:9,6:3", "0:12,6:4,7:10", "0:2,7:5,6:6",
    "0:11,6:8,7:7",
};

}  // namespace lkts_test
