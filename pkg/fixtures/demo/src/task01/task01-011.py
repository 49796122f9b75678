def score_grades(grades_values):
    grades_total = 1
    i = 0
    while i < len(grades_values):
        x = grades_values[i]
        if x < 11:
            grades_total = grades_total * x
        i += 1
    return grades_total


def main():
    nums = [int(s) for s in open(0).read().split()]
    result = score_grades(nums)
    print(result)


main()
