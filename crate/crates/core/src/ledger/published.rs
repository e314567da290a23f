// Generated from the published bounds tables; one entry per printed cell group.

use super::{ConjectureRow, PublishedBound, PublishedTable::*};

pub(crate) static BOUNDS: &[PublishedBound] = &[
    PublishedBound { n: 34, d: 32, prev: Some(192), new: 945, tag: "", table: MinusTwo },
    PublishedBound { n: 159, d: 157, prev: Some(2051), new: 16666, tag: "", table: MinusTwo },
    PublishedBound { n: 291, d: 289, prev: Some(5202), new: 80385, tag: "", table: MinusTwo },
    PublishedBound { n: 39, d: 37, prev: Some(255), new: 1301, tag: "", table: MinusTwo },
    PublishedBound { n: 165, d: 163, prev: Some(2185), new: 17632, tag: "", table: MinusTwo },
    PublishedBound { n: 295, d: 293, prev: Some(5088), new: 54572, tag: "", table: MinusTwo },
    PublishedBound { n: 45, d: 43, prev: Some(270), new: 1726, tag: "", table: MinusTwo },
    PublishedBound { n: 171, d: 169, prev: Some(2354), new: 27330, tag: "", table: MinusTwo },
    PublishedBound { n: 309, d: 307, prev: Some(5539), new: 60715, tag: "", table: MinusTwo },
    PublishedBound { n: 51, d: 49, prev: Some(392), new: 2308, tag: "", table: MinusTwo },
    PublishedBound { n: 175, d: 173, prev: Some(2354), new: 19792, tag: "", table: MinusTwo },
    PublishedBound { n: 315, d: 313, prev: Some(5634), new: 60952, tag: "", table: MinusTwo },
    PublishedBound { n: 55, d: 53, prev: Some(423), new: 2461, tag: "", table: MinusTwo },
    PublishedBound { n: 183, d: 181, prev: Some(2533), new: 21994, tag: "", table: MinusTwo },
    PublishedBound { n: 319, d: 317, prev: Some(5793), new: 67379, tag: "", table: MinusTwo },
    PublishedBound { n: 63, d: 61, prev: Some(1514), new: 3306, tag: "", table: MinusTwo },
    PublishedBound { n: 195, d: 193, prev: Some(2758), new: 25022, tag: "", table: MinusTwo },
    PublishedBound { n: 333, d: 331, prev: Some(6091), new: 70696, tag: "", table: MinusTwo },
    PublishedBound { n: 66, d: 64, prev: Some(576), new: 4029, tag: "", table: MinusTwo },
    PublishedBound { n: 201, d: 199, prev: Some(2867), new: 25427, tag: "", table: MinusTwo },
    PublishedBound { n: 339, d: 337, prev: Some(6280), new: 69485, tag: "", table: MinusTwo },
    PublishedBound { n: 69, d: 67, prev: Some(594), new: 3965, tag: "", table: MinusTwo },
    PublishedBound { n: 213, d: 211, prev: Some(3170), new: 30288, tag: "", table: MinusTwo },
    PublishedBound { n: 345, d: 343, prev: Some(5205), new: 89272, tag: "", table: MinusTwo },
    PublishedBound { n: 75, d: 73, prev: Some(667), new: 4747, tag: "", table: MinusTwo },
    PublishedBound { n: 225, d: 223, prev: Some(3421), new: 32728, tag: "", table: MinusTwo },
    PublishedBound { n: 351, d: 349, prev: Some(6642), new: 76195, tag: "", table: MinusTwo },
    PublishedBound { n: 85, d: 83, prev: Some(812), new: 6116, tag: "", table: MinusTwo },
    PublishedBound { n: 231, d: 229, prev: Some(3548), new: 33779, tag: "", table: MinusTwo },
    PublishedBound { n: 355, d: 353, prev: Some(6746), new: 77215, tag: "", table: MinusTwo },
    PublishedBound { n: 91, d: 89, prev: Some(902), new: 6709, tag: "", table: MinusTwo },
    PublishedBound { n: 235, d: 233, prev: Some(3625), new: 35001, tag: "", table: MinusTwo },
    PublishedBound { n: 363, d: 361, prev: Some(7220), new: 125709, tag: "", table: MinusTwo },
    PublishedBound { n: 99, d: 97, prev: Some(1017), new: 8206, tag: "", table: MinusTwo },
    PublishedBound { n: 245, d: 243, prev: Some(3475), new: 43717, tag: "", table: MinusTwo },
    PublishedBound { n: 369, d: 367, prev: Some(7108), new: 83418, tag: "", table: MinusTwo },
    PublishedBound { n: 105, d: 103, prev: Some(1119), new: 9239, tag: "", table: MinusTwo },
    PublishedBound { n: 253, d: 251, prev: Some(4075), new: 40094, tag: "", table: MinusTwo },
    PublishedBound { n: 375, d: 373, prev: Some(7298), new: 87434, tag: "", table: MinusTwo },
    PublishedBound { n: 111, d: 109, prev: Some(1187), new: 9990, tag: "", table: MinusTwo },
    PublishedBound { n: 259, d: 257, prev: Some(4222), new: 43268, tag: "", table: MinusTwo },
    PublishedBound { n: 385, d: 383, prev: Some(7428), new: 90213, tag: "", table: MinusTwo },
    PublishedBound { n: 115, d: 113, prev: Some(1277), new: 11142, tag: "", table: MinusTwo },
    PublishedBound { n: 265, d: 263, prev: Some(4342), new: 44733, tag: "", table: MinusTwo },
    PublishedBound { n: 391, d: 389, prev: Some(7690), new: 90991, tag: "", table: MinusTwo },
    PublishedBound { n: 123, d: 121, prev: Some(1452), new: 13996, tag: "", table: MinusTwo },
    PublishedBound { n: 273, d: 271, prev: Some(4548), new: 46268, tag: "", table: MinusTwo },
    PublishedBound { n: 411, d: 409, prev: Some(8240), new: 104098, tag: "", table: MinusTwo },
    PublishedBound { n: 133, d: 131, prev: Some(1554), new: 11604, tag: "", table: MinusTwo },
    PublishedBound { n: 279, d: 277, prev: Some(4701), new: 49243, tag: "", table: MinusTwo },
    PublishedBound { n: 514, d: 512, prev: Some(11264), new: 197859, tag: "", table: MinusTwo },
    PublishedBound { n: 141, d: 139, prev: Some(1723), new: 13522, tag: "", table: MinusTwo },
    PublishedBound { n: 285, d: 283, prev: Some(4868), new: 51571, tag: "", table: MinusTwo },
    PublishedBound { n: 531, d: 529, prev: Some(12696), new: 271043, tag: "", table: MinusTwo },
    PublishedBound { n: 153, d: 151, prev: Some(1923), new: 16118, tag: "", table: MinusTwo },
    PublishedBound { n: 30, d: 26, prev: None, new: 58968, tag: "R", table: Parallel },
    PublishedBound { n: 40, d: 34, prev: None, new: 287437, tag: "P", table: Parallel },
    PublishedBound { n: 44, d: 38, prev: None, new: 397198, tag: "P", table: Parallel },
    PublishedBound { n: 45, d: 39, prev: None, new: 413280, tag: "R", table: Parallel },
    PublishedBound { n: 46, d: 39, prev: None, new: 551040, tag: "R", table: Parallel },
    PublishedBound { n: 52, d: 46, prev: None, new: 470397, tag: "R", table: Parallel },
    PublishedBound { n: 53, d: 47, prev: None, new: 470400, tag: "R", table: Parallel },
    PublishedBound { n: 56, d: 50, prev: None, new: 446472, tag: "R", table: Parallel },
    PublishedBound { n: 70, d: 63, prev: None, new: 1503462, tag: "P", table: Parallel },
    PublishedBound { n: 43, d: 37, prev: Some(176988), new: 369948, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 49, d: 43, prev: Some(207552), new: 415062, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 51, d: 44, prev: Some(235200), new: 687903, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 51, d: 45, prev: Some(235200), new: 470347, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 61, d: 54, prev: Some(410640), new: 1181794, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 69, d: 62, prev: Some(601392), new: 1500426, tag: "", table: SimpleFromCosets },
    PublishedBound { n: 18, d: 13, prev: Some(24480), new: 29376, tag: "j", table: Coset },
    PublishedBound { n: 24, d: 19, prev: Some(24288), new: 36432, tag: "j", table: Coset },
    PublishedBound { n: 26, d: 20, prev: Some(202800), new: 234000, tag: "j", table: Coset },
    PublishedBound { n: 26, d: 21, prev: Some(31200), new: 46800, tag: "j", table: Coset },
    PublishedBound { n: 28, d: 22, prev: Some(235872), new: 275184, tag: "j", table: Coset },
    PublishedBound { n: 30, d: 24, prev: Some(170520), new: 292320, tag: "j", table: Coset },
    PublishedBound { n: 32, d: 25, prev: Some(372992), new: 1309440, tag: "j", table: Coset },
    PublishedBound { n: 33, d: 27, prev: Some(97440), new: 327360, tag: "j", table: Coset },
    PublishedBound { n: 34, d: 27, prev: Some(2127840), new: 2455200, tag: "c", table: Coset },
    PublishedBound { n: 38, d: 32, prev: Some(202464), new: 303696, tag: "j", table: Coset },
    PublishedBound { n: 38, d: 30, prev: Some(1265400), new: 6529464, tag: "c", table: Coset },
    PublishedBound { n: 42, d: 34, prev: Some(888729), new: 5028240, tag: "c", table: Coset },
    PublishedBound { n: 42, d: 35, prev: Some(206640), new: 1928640, tag: "j", table: Coset },
    PublishedBound { n: 42, d: 36, prev: Some(206640), new: 413280, tag: "j", table: Coset },
    PublishedBound { n: 44, d: 37, prev: Some(413280), new: 1986600, tag: "j", table: Coset },
    PublishedBound { n: 48, d: 42, prev: Some(207552), new: 415104, tag: "j", table: Coset },
    PublishedBound { n: 49, d: 42, prev: Some(207552), new: 1452864, tag: "c", table: Coset },
    PublishedBound { n: 50, d: 42, prev: Some(207552), new: 5056800, tag: "c", table: Coset },
    PublishedBound { n: 50, d: 43, prev: Some(207552), new: 2116800, tag: "j", table: Coset },
    PublishedBound { n: 50, d: 44, prev: Some(103776), new: 470400, tag: "j", table: Coset },
    PublishedBound { n: 54, d: 47, prev: Some(1339416), new: 2381184, tag: "j", table: Coset },
    PublishedBound { n: 54, d: 48, prev: Some(297648), new: 446472, tag: "j", table: Coset },
    PublishedBound { n: 55, d: 48, prev: Some(297648), new: 1488240, tag: "c", table: Coset },
    PublishedBound { n: 55, d: 49, prev: Some(297648), new: 446472, tag: "j", table: Coset },
    PublishedBound { n: 62, d: 54, prev: Some(821280), new: 8622960, tag: "c", table: Coset },
    PublishedBound { n: 62, d: 55, prev: Some(821280), new: 1361520, tag: "c", table: Coset },
    PublishedBound { n: 68, d: 60, prev: Some(821280), new: 8720184, tag: "c", table: Coset },
    PublishedBound { n: 68, d: 61, prev: Some(524160), new: 1503480, tag: "c", table: Coset },
    PublishedBound { n: 68, d: 62, prev: Some(524160), new: 601392, tag: "j", table: Coset },
    PublishedBound { n: 72, d: 64, prev: Some(888729), new: 6083280, tag: "c", table: Coset },
    PublishedBound { n: 72, d: 65, prev: Some(357840), new: 1431360, tag: "c", table: Coset },
    PublishedBound { n: 18, d: 13, prev: Some(24480), new: 29376, tag: "coset", table: Aggregated },
    PublishedBound { n: 53, d: 47, prev: Some(148824), new: 470400, tag: "parallel", table: Aggregated },
    PublishedBound { n: 171, d: 169, prev: Some(2354), new: 27330, tag: "n-2", table: Aggregated },
    PublishedBound { n: 24, d: 19, prev: Some(24288), new: 36432, tag: "coset", table: Aggregated },
    PublishedBound { n: 54, d: 46, prev: Some(8036496), new: 8334144, tag: "coset", table: Aggregated },
    PublishedBound { n: 175, d: 173, prev: Some(2354), new: 19792, tag: "n-2", table: Aggregated },
    PublishedBound { n: 26, d: 20, prev: Some(202800), new: 234000, tag: "coset", table: Aggregated },
    PublishedBound { n: 54, d: 47, prev: Some(1339416), new: 2381184, tag: "coset", table: Aggregated },
    PublishedBound { n: 183, d: 181, prev: Some(2533), new: 21994, tag: "n-2", table: Aggregated },
    PublishedBound { n: 26, d: 21, prev: Some(31200), new: 46800, tag: "coset", table: Aggregated },
    PublishedBound { n: 54, d: 48, prev: Some(297648), new: 446472, tag: "coset", table: Aggregated },
    PublishedBound { n: 195, d: 193, prev: Some(2758), new: 25022, tag: "n-2", table: Aggregated },
    PublishedBound { n: 28, d: 22, prev: Some(235872), new: 275184, tag: "coset", table: Aggregated },
    PublishedBound { n: 55, d: 48, prev: Some(297648), new: 1488240, tag: "coset", table: Aggregated },
    PublishedBound { n: 201, d: 199, prev: Some(2867), new: 25427, tag: "n-2", table: Aggregated },
    PublishedBound { n: 30, d: 24, prev: Some(170520), new: 292320, tag: "coset", table: Aggregated },
    PublishedBound { n: 55, d: 49, prev: Some(297648), new: 446472, tag: "coset", table: Aggregated },
    PublishedBound { n: 213, d: 211, prev: Some(3170), new: 30288, tag: "n-2", table: Aggregated },
    PublishedBound { n: 30, d: 26, prev: Some(24360), new: 58968, tag: "parallel", table: Aggregated },
    PublishedBound { n: 55, d: 53, prev: Some(423), new: 2461, tag: "n-2", table: Aggregated },
    PublishedBound { n: 225, d: 223, prev: Some(3421), new: 32728, tag: "n-2", table: Aggregated },
    PublishedBound { n: 32, d: 25, prev: Some(372992), new: 1309440, tag: "coset", table: Aggregated },
    PublishedBound { n: 56, d: 50, prev: Some(205320), new: 446472, tag: "parallel", table: Aggregated },
    PublishedBound { n: 231, d: 229, prev: Some(3548), new: 33779, tag: "n-2", table: Aggregated },
    PublishedBound { n: 33, d: 27, prev: Some(97440), new: 327360, tag: "coset", table: Aggregated },
    PublishedBound { n: 61, d: 54, prev: Some(410640), new: 1181794, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 235, d: 233, prev: Some(3625), new: 35001, tag: "n-2", table: Aggregated },
    PublishedBound { n: 34, d: 27, prev: Some(2127840), new: 2455200, tag: "coset", table: Aggregated },
    PublishedBound { n: 62, d: 54, prev: Some(821280), new: 8622960, tag: "coset", table: Aggregated },
    PublishedBound { n: 245, d: 243, prev: Some(3475), new: 43717, tag: "n-2", table: Aggregated },
    PublishedBound { n: 34, d: 32, prev: Some(192), new: 945, tag: "n-2", table: Aggregated },
    PublishedBound { n: 62, d: 55, prev: Some(821280), new: 1361520, tag: "coset", table: Aggregated },
    PublishedBound { n: 253, d: 251, prev: Some(4075), new: 40094, tag: "n-2", table: Aggregated },
    PublishedBound { n: 38, d: 30, prev: Some(1265400), new: 6529464, tag: "coset", table: Aggregated },
    PublishedBound { n: 63, d: 61, prev: Some(1514), new: 3306, tag: "n-2", table: Aggregated },
    PublishedBound { n: 259, d: 257, prev: Some(4222), new: 43268, tag: "n-2", table: Aggregated },
    PublishedBound { n: 38, d: 32, prev: Some(202464), new: 303696, tag: "coset", table: Aggregated },
    PublishedBound { n: 66, d: 64, prev: Some(576), new: 4029, tag: "n-2", table: Aggregated },
    PublishedBound { n: 265, d: 263, prev: Some(4342), new: 44733, tag: "n-2", table: Aggregated },
    PublishedBound { n: 39, d: 37, prev: Some(255), new: 1301, tag: "n-2", table: Aggregated },
    PublishedBound { n: 68, d: 60, prev: Some(821280), new: 8720184, tag: "coset", table: Aggregated },
    PublishedBound { n: 273, d: 271, prev: Some(4548), new: 46268, tag: "n-2", table: Aggregated },
    PublishedBound { n: 40, d: 34, prev: Some(68880), new: 287437, tag: "parallel", table: Aggregated },
    PublishedBound { n: 68, d: 61, prev: Some(524160), new: 1503480, tag: "coset", table: Aggregated },
    PublishedBound { n: 279, d: 277, prev: Some(4701), new: 49243, tag: "n-2", table: Aggregated },
    PublishedBound { n: 42, d: 34, prev: Some(888729), new: 5028240, tag: "coset", table: Aggregated },
    PublishedBound { n: 68, d: 62, prev: Some(524160), new: 601392, tag: "coset", table: Aggregated },
    PublishedBound { n: 285, d: 283, prev: Some(4868), new: 51571, tag: "n-2", table: Aggregated },
    PublishedBound { n: 42, d: 35, prev: Some(206640), new: 1928640, tag: "coset", table: Aggregated },
    PublishedBound { n: 69, d: 62, prev: Some(601392), new: 1500426, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 291, d: 289, prev: Some(5202), new: 80385, tag: "n-2", table: Aggregated },
    PublishedBound { n: 42, d: 36, prev: Some(206640), new: 413280, tag: "coset", table: Aggregated },
    PublishedBound { n: 69, d: 67, prev: Some(594), new: 3965, tag: "n-2", table: Aggregated },
    PublishedBound { n: 295, d: 293, prev: Some(5088), new: 54572, tag: "n-2", table: Aggregated },
    PublishedBound { n: 43, d: 37, prev: Some(176988), new: 369948, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 70, d: 63, prev: Some(524160), new: 1503462, tag: "parallel", table: Aggregated },
    PublishedBound { n: 309, d: 307, prev: Some(5539), new: 60715, tag: "n-2", table: Aggregated },
    PublishedBound { n: 44, d: 37, prev: Some(413280), new: 1986600, tag: "coset", table: Aggregated },
    PublishedBound { n: 72, d: 64, prev: Some(888729), new: 6083280, tag: "coset", table: Aggregated },
    PublishedBound { n: 315, d: 313, prev: Some(5634), new: 60952, tag: "n-2", table: Aggregated },
    PublishedBound { n: 44, d: 38, prev: Some(68880), new: 397198, tag: "parallel", table: Aggregated },
    PublishedBound { n: 72, d: 65, prev: Some(357840), new: 1431360, tag: "coset", table: Aggregated },
    PublishedBound { n: 319, d: 317, prev: Some(5793), new: 67379, tag: "n-2", table: Aggregated },
    PublishedBound { n: 45, d: 39, prev: Some(103776), new: 413280, tag: "parallel", table: Aggregated },
    PublishedBound { n: 75, d: 73, prev: Some(667), new: 4747, tag: "n-2", table: Aggregated },
    PublishedBound { n: 333, d: 331, prev: Some(6091), new: 70696, tag: "n-2", table: Aggregated },
    PublishedBound { n: 45, d: 43, prev: Some(270), new: 1726, tag: "n-2", table: Aggregated },
    PublishedBound { n: 85, d: 83, prev: Some(812), new: 6116, tag: "n-2", table: Aggregated },
    PublishedBound { n: 339, d: 337, prev: Some(6280), new: 69485, tag: "n-2", table: Aggregated },
    PublishedBound { n: 46, d: 39, prev: Some(103776), new: 551040, tag: "parallel", table: Aggregated },
    PublishedBound { n: 91, d: 89, prev: Some(902), new: 6709, tag: "n-2", table: Aggregated },
    PublishedBound { n: 345, d: 343, prev: Some(5205), new: 89272, tag: "n-2", table: Aggregated },
    PublishedBound { n: 48, d: 42, prev: Some(207552), new: 415104, tag: "coset", table: Aggregated },
    PublishedBound { n: 99, d: 97, prev: Some(1017), new: 8206, tag: "n-2", table: Aggregated },
    PublishedBound { n: 351, d: 349, prev: Some(6642), new: 76195, tag: "n-2", table: Aggregated },
    PublishedBound { n: 49, d: 42, prev: Some(207552), new: 1452864, tag: "coset", table: Aggregated },
    PublishedBound { n: 105, d: 103, prev: Some(1119), new: 9239, tag: "n-2", table: Aggregated },
    PublishedBound { n: 355, d: 353, prev: Some(6746), new: 77215, tag: "n-2", table: Aggregated },
    PublishedBound { n: 49, d: 43, prev: Some(207552), new: 415062, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 111, d: 109, prev: Some(1187), new: 9990, tag: "n-2", table: Aggregated },
    PublishedBound { n: 363, d: 361, prev: Some(7220), new: 125709, tag: "n-2", table: Aggregated },
    PublishedBound { n: 50, d: 42, prev: Some(207552), new: 5056800, tag: "coset", table: Aggregated },
    PublishedBound { n: 115, d: 113, prev: Some(1277), new: 11142, tag: "n-2", table: Aggregated },
    PublishedBound { n: 369, d: 367, prev: Some(7108), new: 83418, tag: "n-2", table: Aggregated },
    PublishedBound { n: 50, d: 43, prev: Some(207552), new: 2116800, tag: "coset", table: Aggregated },
    PublishedBound { n: 123, d: 121, prev: Some(1452), new: 13996, tag: "n-2", table: Aggregated },
    PublishedBound { n: 375, d: 373, prev: Some(7298), new: 87434, tag: "n-2", table: Aggregated },
    PublishedBound { n: 50, d: 44, prev: Some(103776), new: 470400, tag: "coset", table: Aggregated },
    PublishedBound { n: 133, d: 131, prev: Some(1554), new: 11604, tag: "n-2", table: Aggregated },
    PublishedBound { n: 385, d: 383, prev: Some(7428), new: 90213, tag: "n-2", table: Aggregated },
    PublishedBound { n: 51, d: 44, prev: Some(235200), new: 687903, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 141, d: 139, prev: Some(1723), new: 13522, tag: "n-2", table: Aggregated },
    PublishedBound { n: 391, d: 389, prev: Some(7690), new: 90991, tag: "n-2", table: Aggregated },
    PublishedBound { n: 51, d: 45, prev: Some(235200), new: 470347, tag: "simple-coset", table: Aggregated },
    PublishedBound { n: 153, d: 151, prev: Some(1923), new: 16118, tag: "n-2", table: Aggregated },
    PublishedBound { n: 411, d: 409, prev: Some(8240), new: 104098, tag: "n-2", table: Aggregated },
    PublishedBound { n: 51, d: 49, prev: Some(392), new: 2308, tag: "n-2", table: Aggregated },
    PublishedBound { n: 159, d: 157, prev: Some(2051), new: 16666, tag: "n-2", table: Aggregated },
    PublishedBound { n: 514, d: 512, prev: Some(11264), new: 197859, tag: "n-2", table: Aggregated },
    PublishedBound { n: 52, d: 46, prev: Some(148824), new: 470397, tag: "parallel", table: Aggregated },
    PublishedBound { n: 165, d: 163, prev: Some(2185), new: 17632, tag: "n-2", table: Aggregated },
    PublishedBound { n: 531, d: 529, prev: Some(12696), new: 271043, tag: "n-2", table: Aggregated },
    PublishedBound { n: 26, d: 25, prev: Some(133), new: 150, tag: "a", table: MinusOneLow },
    PublishedBound { n: 132, d: 131, prev: Some(1508), new: 1572, tag: "g", table: MinusOneLow },
    PublishedBound { n: 212, d: 211, prev: Some(3026), new: 3172, tag: "i", table: MinusOneLow },
    PublishedBound { n: 28, d: 27, prev: Some(140), new: 144, tag: "i", table: MinusOneLow },
    PublishedBound { n: 134, d: 133, prev: Some(804), new: 931, tag: "g", table: MinusOneLow },
    PublishedBound { n: 214, d: 213, prev: Some(1284), new: 1491, tag: "g", table: MinusOneLow },
    PublishedBound { n: 30, d: 29, prev: Some(170), new: 173, tag: "g", table: MinusOneLow },
    PublishedBound { n: 138, d: 137, prev: Some(1614), new: 1696, tag: "g", table: MinusOneLow },
    PublishedBound { n: 218, d: 217, prev: Some(1308), new: 1736, tag: "g", table: MinusOneLow },
    PublishedBound { n: 33, d: 32, prev: Some(183), new: 192, tag: "a", table: MinusOneLow },
    PublishedBound { n: 140, d: 139, prev: Some(1640), new: 1726, tag: "i", table: MinusOneLow },
    PublishedBound { n: 220, d: 219, prev: Some(1320), new: 2190, tag: "g", table: MinusOneLow },
    PublishedBound { n: 34, d: 33, prev: Some(136), new: 165, tag: "g", table: MinusOneLow },
    PublishedBound { n: 142, d: 141, prev: Some(852), new: 987, tag: "g", table: MinusOneLow },
    PublishedBound { n: 222, d: 221, prev: Some(1332), new: 2652, tag: "g", table: MinusOneLow },
    PublishedBound { n: 38, d: 37, prev: Some(254), new: 255, tag: "g", table: MinusOneLow },
    PublishedBound { n: 145, d: 144, prev: Some(1015), new: 1429, tag: "i", table: MinusOneLow },
    PublishedBound { n: 224, d: 223, prev: Some(3260), new: 3475, tag: "i", table: MinusOneLow },
    PublishedBound { n: 42, d: 41, prev: Some(282), new: 286, tag: "g", table: MinusOneLow },
    PublishedBound { n: 146, d: 145, prev: Some(876), new: 1015, tag: "g", table: MinusOneLow },
    PublishedBound { n: 225, d: 224, prev: Some(1800), new: 2902, tag: "i", table: MinusOneLow },
    PublishedBound { n: 44, d: 43, prev: Some(296), new: 307, tag: "g", table: MinusOneLow },
    PublishedBound { n: 148, d: 147, prev: Some(888), new: 1029, tag: "g", table: MinusOneLow },
    PublishedBound { n: 226, d: 225, prev: Some(1356), new: 1800, tag: "k", table: MinusOneLow },
    PublishedBound { n: 46, d: 45, prev: Some(184), new: 270, tag: "g", table: MinusOneLow },
    PublishedBound { n: 150, d: 149, prev: Some(1818), new: 1905, tag: "g", table: MinusOneLow },
    PublishedBound { n: 228, d: 227, prev: Some(3380), new: 3482, tag: "i", table: MinusOneLow },
    PublishedBound { n: 50, d: 49, prev: Some(300), new: 392, tag: "a", table: MinusOneLow },
    PublishedBound { n: 152, d: 151, prev: Some(1832), new: 1946, tag: "g", table: MinusOneLow },
    PublishedBound { n: 230, d: 229, prev: Some(3512), new: 3567, tag: "g", table: MinusOneLow },
    PublishedBound { n: 51, d: 50, prev: Some(255), new: 300, tag: "g", table: MinusOneLow },
    PublishedBound { n: 155, d: 154, prev: Some(1085), new: 1232, tag: "g", table: MinusOneLow },
    PublishedBound { n: 234, d: 233, prev: Some(3602), new: 3673, tag: "i", table: MinusOneLow },
    PublishedBound { n: 54, d: 53, prev: Some(408), new: 423, tag: "g", table: MinusOneLow },
    PublishedBound { n: 156, d: 155, prev: Some(936), new: 1085, tag: "g", table: MinusOneLow },
    PublishedBound { n: 236, d: 235, prev: Some(1416), new: 1645, tag: "g", table: MinusOneLow },
    PublishedBound { n: 58, d: 57, prev: Some(361), new: 399, tag: "i", table: MinusOneLow },
    PublishedBound { n: 158, d: 157, prev: Some(1922), new: 2052, tag: "g", table: MinusOneLow },
    PublishedBound { n: 238, d: 237, prev: Some(1428), new: 1659, tag: "g", table: MinusOneLow },
    PublishedBound { n: 60, d: 59, prev: Some(481), new: 493, tag: "g", table: MinusOneLow },
    PublishedBound { n: 159, d: 158, prev: Some(954), new: 1106, tag: "g", table: MinusOneLow },
    PublishedBound { n: 240, d: 239, prev: Some(3656), new: 3803, tag: "i", table: MinusOneLow },
    PublishedBound { n: 62, d: 61, prev: Some(478), new: 519, tag: "g", table: MinusOneLow },
    PublishedBound { n: 161, d: 160, prev: Some(1377), new: 1440, tag: "i", table: MinusOneLow },
    PublishedBound { n: 242, d: 241, prev: Some(3716), new: 3864, tag: "g", table: MinusOneLow },
    PublishedBound { n: 65, d: 64, prev: Some(455), new: 576, tag: "a", table: MinusOneLow },
    PublishedBound { n: 162, d: 161, prev: Some(972), new: 1127, tag: "g", table: MinusOneLow },
    PublishedBound { n: 244, d: 243, prev: Some(1464), new: 3483, tag: "a", table: MinusOneLow },
    PublishedBound { n: 66, d: 65, prev: Some(380), new: 455, tag: "g", table: MinusOneLow },
    PublishedBound { n: 164, d: 163, prev: Some(2042), new: 2185, tag: "g", table: MinusOneLow },
    PublishedBound { n: 246, d: 245, prev: Some(1476), new: 1715, tag: "g", table: MinusOneLow },
    PublishedBound { n: 68, d: 67, prev: Some(568), new: 594, tag: "g", table: MinusOneLow },
    PublishedBound { n: 166, d: 165, prev: Some(1153), new: 1155, tag: "g", table: MinusOneLow },
    PublishedBound { n: 248, d: 247, prev: Some(1736), new: 2964, tag: "g", table: MinusOneLow },
    PublishedBound { n: 72, d: 71, prev: Some(588), new: 637, tag: "g", table: MinusOneLow },
    PublishedBound { n: 168, d: 167, prev: Some(2070), new: 2267, tag: "g", table: MinusOneLow },
    PublishedBound { n: 250, d: 249, prev: Some(1500), new: 1743, tag: "g", table: MinusOneLow },
    PublishedBound { n: 74, d: 73, prev: Some(620), new: 667, tag: "g", table: MinusOneLow },
    PublishedBound { n: 170, d: 169, prev: Some(1020), new: 2366, tag: "a", table: MinusOneLow },
    PublishedBound { n: 252, d: 251, prev: Some(3932), new: 4075, tag: "g", table: MinusOneLow },
    PublishedBound { n: 76, d: 75, prev: Some(456), new: 525, tag: "g", table: MinusOneLow },
    PublishedBound { n: 172, d: 171, prev: Some(1032), new: 1368, tag: "k", table: MinusOneLow },
    PublishedBound { n: 254, d: 253, prev: Some(2286), new: 3027, tag: "i", table: MinusOneLow },
    PublishedBound { n: 80, d: 79, prev: Some(720), new: 755, tag: "g", table: MinusOneLow },
    PublishedBound { n: 174, d: 173, prev: Some(2316), new: 2358, tag: "i", table: MinusOneLow },
    PublishedBound { n: 255, d: 254, prev: Some(1785), new: 2286, tag: "g", table: MinusOneLow },
    PublishedBound { n: 82, d: 81, prev: Some(656), new: 810, tag: "a", table: MinusOneLow },
    PublishedBound { n: 177, d: 176, prev: Some(1593), new: 2214, tag: "i", table: MinusOneLow },
    PublishedBound { n: 258, d: 257, prev: Some(4066), new: 4222, tag: "g", table: MinusOneLow },
    PublishedBound { n: 84, d: 83, prev: Some(776), new: 812, tag: "g", table: MinusOneLow },
    PublishedBound { n: 178, d: 177, prev: Some(1068), new: 1593, tag: "g", table: MinusOneLow },
    PublishedBound { n: 260, d: 259, prev: Some(1560), new: 3108, tag: "g", table: MinusOneLow },
    PublishedBound { n: 90, d: 89, prev: Some(866), new: 902, tag: "g", table: MinusOneLow },
    PublishedBound { n: 180, d: 179, prev: Some(2404), new: 2500, tag: "g", table: MinusOneLow },
    PublishedBound { n: 264, d: 263, prev: Some(4228), new: 4351, tag: "i", table: MinusOneLow },
    PublishedBound { n: 92, d: 91, prev: Some(552), new: 637, tag: "g", table: MinusOneLow },
    PublishedBound { n: 182, d: 181, prev: Some(1092), new: 2533, tag: "g", table: MinusOneLow },
    PublishedBound { n: 266, d: 265, prev: Some(1862), new: 2120, tag: "g", table: MinusOneLow },
    PublishedBound { n: 98, d: 97, prev: Some(956), new: 1017, tag: "g", table: MinusOneLow },
    PublishedBound { n: 186, d: 185, prev: Some(1619), new: 1665, tag: "g", table: MinusOneLow },
    PublishedBound { n: 268, d: 267, prev: Some(1876), new: 2670, tag: "g", table: MinusOneLow },
    PublishedBound { n: 102, d: 101, prev: Some(1030), new: 1101, tag: "g", table: MinusOneLow },
    PublishedBound { n: 188, d: 187, prev: Some(1128), new: 1870, tag: "k", table: MinusOneLow },
    PublishedBound { n: 270, d: 269, prev: Some(4318), new: 4521, tag: "i", table: MinusOneLow },
    PublishedBound { n: 104, d: 103, prev: Some(1070), new: 1119, tag: "g", table: MinusOneLow },
    PublishedBound { n: 190, d: 189, prev: Some(1140), new: 1512, tag: "g", table: MinusOneLow },
    PublishedBound { n: 272, d: 271, prev: Some(4408), new: 4575, tag: "i", table: MinusOneLow },
    PublishedBound { n: 106, d: 105, prev: Some(636), new: 735, tag: "g", table: MinusOneLow },
    PublishedBound { n: 192, d: 191, prev: Some(2638), new: 2767, tag: "i", table: MinusOneLow },
    PublishedBound { n: 274, d: 273, prev: Some(1644), new: 3873, tag: "i", table: MinusOneLow },
    PublishedBound { n: 108, d: 107, prev: Some(1090), new: 1175, tag: "g", table: MinusOneLow },
    PublishedBound { n: 194, d: 193, prev: Some(2680), new: 2803, tag: "i", table: MinusOneLow },
    PublishedBound { n: 276, d: 275, prev: Some(2760), new: 3575, tag: "g", table: MinusOneLow },
    PublishedBound { n: 110, d: 109, prev: Some(1130), new: 1199, tag: "g", table: MinusOneLow },
    PublishedBound { n: 196, d: 195, prev: Some(1176), new: 1365, tag: "g", table: MinusOneLow },
    PublishedBound { n: 278, d: 277, prev: Some(4574), new: 4767, tag: "i", table: MinusOneLow },
    PublishedBound { n: 114, d: 113, prev: Some(1192), new: 1277, tag: "g", table: MinusOneLow },
    PublishedBound { n: 198, d: 197, prev: Some(2786), new: 2870, tag: "g", table: MinusOneLow },
    PublishedBound { n: 280, d: 279, prev: Some(1960), new: 2511, tag: "g", table: MinusOneLow },
    PublishedBound { n: 116, d: 115, prev: Some(696), new: 805, tag: "g", table: MinusOneLow },
    PublishedBound { n: 200, d: 199, prev: Some(2842), new: 2867, tag: "g", table: MinusOneLow },
    PublishedBound { n: 282, d: 281, prev: Some(4684), new: 4863, tag: "i", table: MinusOneLow },
    PublishedBound { n: 118, d: 117, prev: Some(708), new: 936, tag: "k", table: MinusOneLow },
    PublishedBound { n: 202, d: 201, prev: Some(1212), new: 1407, tag: "i", table: MinusOneLow },
    PublishedBound { n: 284, d: 283, prev: Some(4706), new: 4916, tag: "i", table: MinusOneLow },
    PublishedBound { n: 122, d: 121, prev: Some(732), new: 1452, tag: "a", table: MinusOneLow },
    PublishedBound { n: 204, d: 203, prev: Some(1224), new: 1421, tag: "i", table: MinusOneLow },
    PublishedBound { n: 286, d: 285, prev: Some(1716), new: 3420, tag: "g", table: MinusOneLow },
    PublishedBound { n: 126, d: 125, prev: Some(756), new: 1221, tag: "a", table: MinusOneLow },
    PublishedBound { n: 206, d: 205, prev: Some(1236), new: 1640, tag: "g", table: MinusOneLow },
    PublishedBound { n: 290, d: 289, prev: Some(1740), new: 5202, tag: "a", table: MinusOneLow },
    PublishedBound { n: 129, d: 128, prev: Some(903), new: 1472, tag: "a", table: MinusOneLow },
    PublishedBound { n: 209, d: 208, prev: Some(2299), new: 2912, tag: "g", table: MinusOneLow },
    PublishedBound { n: 294, d: 293, prev: Some(5068), new: 5088, tag: "g", table: MinusOneLow },
    PublishedBound { n: 130, d: 129, prev: Some(780), new: 903, tag: "g", table: MinusOneLow },
    PublishedBound { n: 210, d: 209, prev: Some(2100), new: 2299, tag: "g", table: MinusOneLow },
    PublishedBound { n: 300, d: 299, prev: Some(2100), new: 3588, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 406, d: 405, prev: Some(2842), new: 3240, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 494, d: 493, prev: Some(2964), new: 7888, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 306, d: 305, prev: Some(1836), new: 4575, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 408, d: 407, prev: Some(4070), new: 6105, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 498, d: 497, prev: Some(2988), new: 7455, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 308, d: 307, prev: Some(5360), new: 5524, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 410, d: 409, prev: Some(2870), new: 8389, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 500, d: 499, prev: Some(3500), new: 11373, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 312, d: 311, prev: Some(5436), new: 5660, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 412, d: 411, prev: Some(3296), new: 5343, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 504, d: 503, prev: Some(3527), new: 11416, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 314, d: 313, prev: Some(2198), new: 5723, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 414, d: 413, prev: Some(4140), new: 4956, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 506, d: 505, prev: Some(3036), new: 7575, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 316, d: 315, prev: Some(2212), new: 3150, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 415, d: 414, prev: Some(3735), new: 4140, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 508, d: 507, prev: Some(3556), new: 7605, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 318, d: 317, prev: Some(2226), new: 5793, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 417, d: 416, prev: Some(6255), new: 7481, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 510, d: 509, prev: Some(3060), new: 11661, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 322, d: 321, prev: Some(1932), new: 4815, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 418, d: 417, prev: Some(2926), new: 6255, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 513, d: 512, prev: Some(9234), new: 11264, tag: "a", table: MinusOneHigh },
    PublishedBound { n: 324, d: 323, prev: Some(2592), new: 5168, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 420, d: 419, prev: Some(2940), new: 8744, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 516, d: 515, prev: Some(4128), new: 7725, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 326, d: 325, prev: Some(1956), new: 3900, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 422, d: 421, prev: Some(2954), new: 8822, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 518, d: 517, prev: Some(5170), new: 6204, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 330, d: 329, prev: Some(1980), new: 2961, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 424, d: 423, prev: Some(3384), new: 6345, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 520, d: 519, prev: Some(4160), new: 7785, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 332, d: 331, prev: Some(2324), new: 6105, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 426, d: 425, prev: Some(2556), new: 6800, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 522, d: 521, prev: Some(5220), new: 11983, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 334, d: 333, prev: Some(2338), new: 2664, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 430, d: 429, prev: Some(2580), new: 3003, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 524, d: 523, prev: Some(6288), new: 12029, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 335, d: 334, prev: Some(2010), new: 2338, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 432, d: 431, prev: Some(6480), new: 9051, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 526, d: 525, prev: Some(4208), new: 7875, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 338, d: 337, prev: Some(2028), new: 6349, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 434, d: 433, prev: Some(2608), new: 9093, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 528, d: 527, prev: Some(7920), new: 8432, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 340, d: 339, prev: Some(2040), new: 2373, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 436, d: 435, prev: Some(2616), new: 6525, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 530, d: 529, prev: Some(3710), new: 12696, tag: "a", table: MinusOneHigh },
    PublishedBound { n: 344, d: 343, prev: Some(2408), new: 6076, tag: "a", table: MinusOneHigh },
    PublishedBound { n: 438, d: 437, prev: Some(3066), new: 7866, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 532, d: 531, prev: Some(4256), new: 7965, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 346, d: 345, prev: Some(2076), new: 2415, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 440, d: 439, prev: Some(3159), new: 9219, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 534, d: 533, prev: Some(3738), new: 6396, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 348, d: 347, prev: Some(2088), new: 6658, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 442, d: 441, prev: Some(3528), new: 6615, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 536, d: 535, prev: Some(4288), new: 8025, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 350, d: 349, prev: Some(2800), new: 6714, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 444, d: 443, prev: Some(3108), new: 9069, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 538, d: 537, prev: Some(5380), new: 8055, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 354, d: 353, prev: Some(2124), new: 6746, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 446, d: 445, prev: Some(3122), new: 5785, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 540, d: 539, prev: Some(6480), new: 8085, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 356, d: 355, prev: Some(2492), new: 3195, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 450, d: 449, prev: Some(3220), new: 9429, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 542, d: 541, prev: Some(3794), new: 12443, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 358, d: 357, prev: Some(2148), new: 3213, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 452, d: 451, prev: Some(4510), new: 6765, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 545, d: 544, prev: Some(8704), new: 9792, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 360, d: 359, prev: Some(2520), new: 6965, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 456, d: 455, prev: Some(3192), new: 6825, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 548, d: 547, prev: Some(3836), new: 12581, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 362, d: 361, prev: Some(2172), new: 7220, tag: "a", table: MinusOneHigh },
    PublishedBound { n: 458, d: 457, prev: Some(3206), new: 9644, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 550, d: 549, prev: Some(3850), new: 4392, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 366, d: 365, prev: Some(2196), new: 2555, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 460, d: 459, prev: Some(3220), new: 7334, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 552, d: 551, prev: Some(5220), new: 9918, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 368, d: 367, prev: Some(5520), new: 7108, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 462, d: 461, prev: Some(3234), new: 10061, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 558, d: 557, prev: Some(3906), new: 13329, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 370, d: 369, prev: Some(2952), new: 5535, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 464, d: 463, prev: Some(6960), new: 10162, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 561, d: 560, prev: Some(3927), new: 8400, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 372, d: 371, prev: Some(2604), new: 5565, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 466, d: 465, prev: Some(3262), new: 6975, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 564, d: 563, prev: Some(3948), new: 13500, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 374, d: 373, prev: Some(2618), new: 7381, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 468, d: 467, prev: Some(3744), new: 10253, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 566, d: 565, prev: Some(3396), new: 3955, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 376, d: 375, prev: Some(2632), new: 5625, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 470, d: 469, prev: Some(3290), new: 3752, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 570, d: 569, prev: Some(3420), new: 13654, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 378, d: 377, prev: Some(4524), new: 4901, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 472, d: 471, prev: Some(3304), new: 7065, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 572, d: 571, prev: Some(4004), new: 13699, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 380, d: 379, prev: Some(2660), new: 7556, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 474, d: 473, prev: Some(4740), new: 7095, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 576, d: 575, prev: Some(4608), new: 12650, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 382, d: 381, prev: Some(2674), new: 4572, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 476, d: 475, prev: Some(3332), new: 8550, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 578, d: 577, prev: Some(4046), new: 13848, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 384, d: 383, prev: Some(5760), new: 7692, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 478, d: 477, prev: Some(3816), new: 7155, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 582, d: 581, prev: Some(4074), new: 4648, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 386, d: 385, prev: Some(2702), new: 5775, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 480, d: 479, prev: Some(7200), new: 10538, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 584, d: 583, prev: Some(4088), new: 5830, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 388, d: 387, prev: Some(3096), new: 5805, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 482, d: 481, prev: Some(5772), new: 7215, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 586, d: 585, prev: Some(4102), new: 4680, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 390, d: 389, prev: Some(2730), new: 7897, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 484, d: 483, prev: Some(3872), new: 7245, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 588, d: 587, prev: Some(4116), new: 14088, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 392, d: 391, prev: Some(2744), new: 6256, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 485, d: 484, prev: Some(3395), new: 3872, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 590, d: 589, prev: Some(10030), new: 10602, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 398, d: 397, prev: Some(2786), new: 7940, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 486, d: 485, prev: Some(2916), new: 3395, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 591, d: 590, prev: Some(4137), new: 10030, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 402, d: 401, prev: Some(2814), new: 8020, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 488, d: 487, prev: Some(3416), new: 10714, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 594, d: 593, prev: Some(4752), new: 14232, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 404, d: 403, prev: Some(4836), new: 6045, tag: "k", table: MinusOneHigh },
    PublishedBound { n: 490, d: 489, prev: Some(2940), new: 7335, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 596, d: 595, prev: Some(4172), new: 8925, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 405, d: 404, prev: Some(3240), new: 4444, tag: "g", table: MinusOneHigh },
    PublishedBound { n: 492, d: 491, prev: Some(2952), new: 10802, tag: "i", table: MinusOneHigh },
    PublishedBound { n: 600, d: 599, prev: Some(8400), new: 14828, tag: "i", table: MinusOneHigh },
];

/// Rows where the computed M(n, n−1) bound falls below the conjectured one.
pub(crate) static CONJECTURE_EXCEPTIONS: &[ConjectureRow] = &[
    ConjectureRow { n: 145, d: 144, computed: 1429, conjectured: 1440 },
    ConjectureRow { n: 177, d: 176, computed: 2214, conjectured: 2288 },
    ConjectureRow { n: 225, d: 224, computed: 2902, conjectured: 2912 },
    ConjectureRow { n: 254, d: 253, computed: 3027, conjectured: 3036 },
];
