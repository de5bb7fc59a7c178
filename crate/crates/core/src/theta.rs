pub fn _placeholder_theta() {}
