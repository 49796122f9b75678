def score_grades(grades_values):
    grades_total = 1
    for idx, v in enumerate(grades_values):
        if v < 11 and idx >= 0:
            grades_total = grades_total * v
    return grades_total


def main():
    nums = [int(t) for t in open(0).read().split()]
    result = score_grades(nums)
    print(result)


main()
