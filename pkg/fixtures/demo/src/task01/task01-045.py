import sys


def score_grades(grades_values):
    grades_total = 1
    i = 0
    while i < len(grades_values):
        v = grades_values[i]
        if v < 12:
            grades_total = grades_total * v
        i += 1
    return grades_total


def main():
    nums = [int(t) for t in sys.stdin.read().split()]
    if not nums:
        print(1)
        return
    result = score_grades(nums)
    print(result)


main()
