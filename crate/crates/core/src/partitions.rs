//! Integer partitions with parts in non-increasing order.

/// Partitions of `n` in reverse lexicographic order, starting from `[n]`.
#[derive(Clone, Debug)]
pub struct Partitions {
    current: Option<Vec<usize>>,
}

pub fn partitions(n: usize) -> Partitions {
    Partitions {
        current: (n > 0).then(|| vec![n]),
    }
}

impl Iterator for Partitions {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.current.take()?;
        let mut next = current.clone();
        let mut ones = 0;
        while next.last() == Some(&1) {
            next.pop();
            ones += 1;
        }
        if let Some(last) = next.pop() {
            let part = last - 1;
            let mut rest = ones + 1;
            next.push(part);
            while rest > part {
                next.push(part);
                rest -= part;
            }
            if rest > 0 {
                next.push(rest);
            }
            self.current = Some(next);
        }
        Some(current)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        let p = [1, 2, 3, 5, 7, 11, 15, 22, 30, 42, 56, 77, 101, 135, 176];
        for (n, &count) in (1..).zip(p.iter()) {
            let all: Vec<_> = partitions(n).collect();
            assert_eq!(all.len(), count, "n = {n}");
            for part in &all {
                assert_eq!(part.iter().sum::<usize>(), n);
                assert!(part.windows(2).all(|w| w[0] >= w[1]));
            }
        }
    }

    #[test]
    fn order_for_four() {
        let all: Vec<_> = partitions(4).collect();
        assert_eq!(
            all,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
    }

    #[test]
    fn zero_has_no_partitions_listed() {
        assert_eq!(partitions(0).count(), 0);
    }
}
